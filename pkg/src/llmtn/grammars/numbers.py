"""Number words for en-US readings, used to populate the grammar string maps."""

from __future__ import annotations

ONES = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"]
TEENS = ["ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
         "seventeen", "eighteen", "nineteen"]
TENS = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"]
SCALES = ["", "thousand", "million", "billion"]

MAX_CARDINAL = 10 ** 12

_ORDINAL_IRREGULAR = {
    "one": "first", "two": "second", "three": "third", "five": "fifth",
    "eight": "eighth", "nine": "ninth", "twelve": "twelfth",
}


def two_digit(n: int) -> str:
    if n < 10:
        return ONES[n]
    if n < 20:
        return TEENS[n - 10]
    tens, ones = divmod(n, 10)
    return TENS[tens] if ones == 0 else f"{TENS[tens]} {ONES[ones]}"


def three_digit(n: int, with_and: bool = False) -> str:
    hundreds, rest = divmod(n, 100)
    if not hundreds:
        return two_digit(rest)
    head = f"{ONES[hundreds]} hundred"
    if not rest:
        return head
    return f"{head} and {two_digit(rest)}" if with_and else f"{head} {two_digit(rest)}"


def cardinal_words(n: int) -> str:
    """Canonical reading: no "and", no hyphens."""
    if not 0 <= n <= MAX_CARDINAL:
        raise ValueError(f"cardinal out of range: {n}")
    if n == 0:
        return "zero"
    if n == MAX_CARDINAL:
        return "one trillion"
    parts = []
    for k in range(3, -1, -1):
        group = (n // 1000 ** k) % 1000
        if group:
            parts.append(three_digit(group))
            if SCALES[k]:
                parts.append(SCALES[k])
    return " ".join(parts)


def ordinal_word(word: str) -> str:
    if word in _ORDINAL_IRREGULAR:
        return _ORDINAL_IRREGULAR[word]
    if word.endswith("y"):
        return word[:-1] + "ieth"
    return word + "th"


def ordinal_suffix(n: int) -> str:
    if n % 100 in (11, 12, 13):
        return "th"
    return {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")


def ordinal_words(n: int) -> str:
    words = cardinal_words(n).split()
    words[-1] = ordinal_word(words[-1])
    return " ".join(words)


def plural(word: str) -> str:
    if word == "half":
        return "halves"
    return word + "s"


def digit_word(d: str, zero: str = "o") -> str:
    return zero if d == "0" else ONES[int(d)]


def pair_readings(s: str) -> list[tuple[str, float]]:
    """Readings of a two-digit chunk as used in years and phone numbers."""
    n = int(s)
    if s[0] == "0":
        if n == 0:
            return [("o o", 0.0), ("hundred", 1.0)]
        return [(f"o {ONES[n]}", 0.0), (f"zero {ONES[n]}", 1.0)]
    return [(two_digit(n), 0.0)]


def year_readings(n: int) -> list[tuple[str, float]]:
    """All felicitous readings of a year, with weight 0 on the canonical one."""
    if not 1 <= n <= 9999:
        raise ValueError(f"year out of range: {n}")
    out: dict[str, float] = {}

    def add(text: str, w: float) -> None:
        if w < out.get(text, float("inf")):
            out[text] = w

    s = str(n)
    cardinal = cardinal_words(n)
    if n < 100:
        add(cardinal, 0.0)
        return sorted(out.items(), key=lambda kv: (kv[1], kv[0]))
    if n < 1000:
        add(cardinal, 0.0)
        add(three_digit(n, with_and=True), 2.0)
        if s[1:] != "00":
            for tail, w in pair_readings(s[1:]):
                add(f"{ONES[int(s[0])]} {tail}", 1.0 + w)
        return sorted(out.items(), key=lambda kv: (kv[1], kv[0]))
    pairwise = []
    for tail, w in pair_readings(s[2:]):
        if tail == "o o":
            continue
        pairwise.append((f"{two_digit(int(s[:2]))} {tail}", w))
    cardinal_first = 2000 <= n <= 2099 or n % 1000 < 10 or n % 1000 == 0
    add(cardinal, 0.0 if cardinal_first else 1.0)
    and_form = _cardinal_with_and(n)
    if and_form != cardinal:
        add(and_form, 2.0)
    for k, (text, w) in enumerate(pairwise):
        add(text, (1.0 if cardinal_first else 0.0) + w + k * 0.5)
    if s[1:3] == "00" and s[3] != "0":
        add(f"{ONES[int(s[0])]} o o {ONES[int(s[3])]}", 1.5)
    return sorted(out.items(), key=lambda kv: (kv[1], kv[0]))


def _cardinal_with_and(n: int) -> str:
    thousands, rest = divmod(n, 1000)
    head = f"{ONES[thousands]} thousand" if thousands else ""
    if not rest:
        return head
    if rest < 100:
        tail = f"and {two_digit(rest)}"
    else:
        tail = three_digit(rest, with_and=True)
    return f"{head} {tail}".strip()
