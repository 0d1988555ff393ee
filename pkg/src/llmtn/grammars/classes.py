"""Machines for each semiotic class.

Every builder takes ``lenient``. The strict machine holds the felicitous
readings of a written token (weight 0 on the canonical one). The lenient
machine adds readings that are infelicitous but still let a listener recover
the written token, e.g. an abbreviation left unexpanded or a day read as a
cardinal. Lenient extras carry weight ``LENIENT`` so they never win.
"""

from __future__ import annotations

import calendar
from functools import lru_cache
from importlib import resources

from .. import fst
from ..fst import EPS, Fst
from . import numbers as num
from .builder import (CHARS, LENIENT, VARIANT, WORDS, c, cross, delete, finish, insert,
                      opt, string_map, u, weighted)

DIGITS = "0123456789"
LETTERS = "abcdefghijklmnopqrstuvwxyz"
MONTHS = [calendar.month_name[m].lower() for m in range(1, 13)]
MONTH_ABBR = {m: [calendar.month_abbr[m].lower()] for m in range(1, 13)}
MONTH_ABBR[9].append("sept")


def data_rows(name: str) -> list[list[str]]:
    text = resources.files("llmtn.grammars").joinpath("data").joinpath(name).read_text("utf-8")
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("# "):
            continue
        rows.append(line.split("\t"))
    return rows


# cardinals


def _group_rows(n: int, written: str, scale: str) -> list[tuple[str, str, float]]:
    tail = f" {scale}" if scale else ""
    plain = num.three_digit(n)
    rows = [(written, plain + tail, 0.0)]
    with_and = num.three_digit(n, with_and=True)
    if with_and != plain:
        rows.append((written, with_and + tail, VARIANT))
    return rows


@lru_cache(maxsize=None)
def _lead_group(scale: str = "", exclude: frozenset = frozenset()) -> Fst:
    rows = []
    for n in range(1, 1000):
        if n not in exclude:
            rows.extend(_group_rows(n, str(n), scale))
    return string_map(rows)


@lru_cache(maxsize=None)
def _padded_group(scale: str = "", last: bool = False) -> Fst:
    rows = [("000", "", 0.0)]
    for n in range(1, 1000):
        w = "%03d" % n
        rows.extend(_group_rows(n, w, scale))
        if last and n < 100:
            rows.append((w, "and " + num.two_digit(n), VARIANT))
    return string_map(rows)


def _embed(dest: Fst, m: Fst) -> tuple[int, dict[int, float]]:
    off = m._copy_into(dest)
    return m.start + off, {q + off: w for q, w in m._finals.items()}


@lru_cache(maxsize=None)
def cardinal_core(max_groups: int = 4, exclude: frozenset = frozenset()) -> Fst:
    """Unsigned cardinals without leading zeros, up to 10^12 when ``max_groups`` is 4.

    Built as a DAG that shares the trailing group blocks: the lead group is
    followed by nothing, or "thousand" then the last group, or "million" then
    the thousands block then the last group, and so on. ``exclude`` removes
    values from the one-group range only (used for singular/plural agreement).
    """
    m = Fst(CHARS, WORDS)
    start = m.add_state()
    m.set_start(start)
    if 0 not in exclude:
        z0, zf = _embed(m, cross("0", "zero"))
        m.add_arc(start, EPS, EPS, 0.0, z0)
        m._finals.update(zf)
    single_start, single_finals = _embed(m, _lead_group("", exclude))
    m.add_arc(start, EPS, EPS, 0.0, single_start)
    m._finals.update(single_finals)
    if max_groups >= 2:
        last_start, last_finals = _embed(m, _padded_group("", last=True))
        m._finals.update(last_finals)
        block_start = last_start
        for k in range(1, max_groups):
            lead_start, lead_finals = _embed(m, _lead_group(num.SCALES[k]))
            m.add_arc(start, EPS, EPS, 0.0, lead_start)
            for q, w in lead_finals.items():
                m.add_arc(q, EPS, EPS, w, block_start)
            if k + 1 < max_groups:
                pad_start, pad_finals = _embed(m, _padded_group(num.SCALES[k]))
                for q, w in pad_finals.items():
                    m.add_arc(q, EPS, EPS, w, block_start)
                block_start = pad_start
    if max_groups >= 4 and 10 ** 12 not in exclude:
        t0, tf = _embed(m, cross("1000000000000", "one trillion"))
        m.add_arc(start, EPS, EPS, 0.0, t0)
        m._finals.update(tf)
    return finish(m)


@lru_cache(maxsize=None)
def digit_map(zero: str = "o") -> Fst:
    other = "zero" if zero == "o" else "o"
    rows = [(d, num.digit_word(d, zero), 0.0) for d in DIGITS]
    rows.append(("0", other, VARIANT))
    return string_map(rows)


@lru_cache(maxsize=None)
def digit_string(zero: str = "o") -> Fst:
    return finish(fst.plus_closure(digit_map(zero)))


def _digits_exact(n: int, zero: str) -> Fst:
    return c(*[digit_map(zero)] * n)


@lru_cache(maxsize=None)
def cardinal(lenient: bool = False) -> Fst:
    m = c(opt(cross("-", "minus")), cardinal_core())
    if lenient:
        m = u(m, weighted(digit_string("o"), LENIENT))
    return finish(m)


@lru_cache(maxsize=None)
def digit(lenient: bool = False) -> Fst:
    m = digit_string("o")
    if lenient:
        m = u(m, weighted(fst.plus_closure(string_map([("0", "oh")])), LENIENT),
              weighted(c(digit_string("o"), string_map([("0", "oh")]), digit_string("o")),
                       LENIENT))
    return finish(m)


# ordinals

NUMBER_WORDS = (num.ONES + num.TEENS + num.TENS[2:]
                + ["hundred", "thousand", "million", "billion", "trillion"])
_SUFFIX_OF = {"one": "st", "two": "nd", "three": "rd"}


def _ordinalizer(suffix: str) -> Fst:
    """Word-level: copy number words, turn the last one into its ordinal."""
    m = Fst(WORDS, WORDS)
    s0, s1 = m.add_state(), m.add_state()
    m.set_start(s0)
    m.set_final(s1)
    for w in NUMBER_WORDS + ["and"]:
        i = WORDS.add(w)
        m.add_arc(s0, i, i, 0.0, s0)
    for w in NUMBER_WORDS:
        if _SUFFIX_OF.get(w, "th") == suffix:
            m.add_arc(s0, WORDS.add(w), WORDS.add(num.ordinal_word(w)), 0.0, s1)
    return m


@lru_cache(maxsize=None)
def ordinal(lenient: bool = False) -> Fst:
    base = cardinal_core(max_groups=3)
    parts = [c(fst.compose(base, _ordinalizer(s)), delete(s)) for s in ("st", "nd", "rd", "th")]
    if lenient:
        parts.append(weighted(c(base, u(*[delete(s) for s in ("st", "nd", "rd", "th")])),
                              LENIENT))
    return finish(u(*parts))


# fractions


def _small_cardinals(lo: int, hi: int, exclude=()) -> Fst:
    return string_map([(str(n), num.cardinal_words(n)) for n in range(lo, hi + 1)
                       if n not in exclude])


def _denominators(plural_form: bool) -> Fst:
    rows = []
    for b in range(2, 1000):
        words = num.ordinal_words(b).split()
        if b == 2:
            words = ["half"]
        if plural_form:
            words[-1] = num.plural(words[-1])
        rows.append((str(b), " ".join(words), 0.0))
        if b == 4:
            rows.append(("4", "quarters" if plural_form else "quarter", VARIANT))
    return string_map(rows)


@lru_cache(maxsize=None)
def fraction(lenient: bool = False) -> Fst:
    one = cross("1", "one")
    not_one = _small_cardinals(0, 999, exclude=(1,))
    all_nums = _small_cardinals(0, 999)
    bar = delete("/")
    parts = [
        c(one, bar, _denominators(False)),
        c(not_one, bar, _denominators(True)),
        weighted(c(all_nums, cross("/", "over"), _small_cardinals(1, 999)), VARIANT),
        weighted(c(all_nums, cross("/", "slash"), _small_cardinals(1, 999)), VARIANT),
    ]
    if lenient:
        parts.append(weighted(c(not_one, bar, _denominators(False)), LENIENT))
        parts.append(weighted(c(one, bar, _denominators(True)), LENIENT))
    simple = u(*parts)
    mixed = c(_small_cardinals(1, 999), cross(" ", "and"), simple)
    return finish(u(simple, mixed))


# decimals

_SCALE_WORDS = ("million", "billion", "trillion")


@lru_cache(maxsize=None)
def decimal(lenient: bool = False) -> Fst:
    sign = opt(cross("-", "minus"))
    frac = digit_string("zero")
    point = cross(".", "point")
    parts = [
        c(sign, cardinal_core(), point, frac),
        c(sign, point, frac),
        weighted(c(sign, delete("0"), point, frac), VARIANT),
    ]
    if lenient:
        parts.append(weighted(c(sign, cardinal_core(), cross(".", "dot"), frac), LENIENT))
    scale = opt(u(*[cross(" " + s, s) for s in _SCALE_WORDS]))
    return finish(c(u(*parts), scale))


# measures


@lru_cache(maxsize=None)
def measure(lenient: bool = False) -> Fst:
    units = data_rows("units.tsv")
    singular = string_map([(w, sg) for w, sg, _ in units])
    plural_ = string_map([(w, pl) for w, _, pl in units])
    gap = u(delete(" "), insert(""))
    sign = opt(cross("-", "minus"))
    amount_other = c(sign, cardinal_core(exclude=frozenset({1})))
    amount_dec = c(sign, u(cardinal_core(), insert("")), cross(".", "point"), digit_string("zero"))
    parts = [
        c(cross("1", "one"), gap, singular),
        c(amount_other, gap, plural_),
        c(amount_dec, gap, plural_),
    ]
    if lenient:
        literal = string_map([(w, w) for w, _, _ in units if " " not in w])
        amounts = u(cardinal(), amount_dec)
        parts.append(weighted(c(cross("1", "one"), gap, plural_), LENIENT))
        parts.append(weighted(c(amount_other, gap, singular), LENIENT))
        parts.append(weighted(c(amounts, gap, literal), LENIENT))
    return finish(u(*parts))


# money


def currency_rows() -> list[tuple[str, str, str, str, str]]:
    return [tuple(r) for r in data_rows("currencies.tsv")]


@lru_cache(maxsize=64)
def money_for(row: tuple[str, str, str, str, str], lenient: bool = False) -> Fst:
    sym, sg, pl, minor_sg, minor_pl = row
    pre = c(delete(sym), opt(delete(" ")))
    cents_rows = [(".00", "", 0.0)]
    only_rows = []
    for n in range(1, 100):
        reading = f"{num.two_digit(n)} {minor_sg if n == 1 else minor_pl}"
        cents_rows.append((".%02d" % n, reading, 0.0))
        cents_rows.append((".%02d" % n, "and " + reading, VARIANT))
        only_rows.append(("0.%02d" % n, reading, 0.0))
        only_rows.append((".%02d" % n, reading, VARIANT))
    cents = string_map(cents_rows)
    one = cross("1", "one")
    other = cardinal_core(exclude=frozenset({0, 1}))
    scale = c(u(delete(" "), insert("")),
              string_map([("million", "million"), ("billion", "billion"),
                          ("trillion", "trillion"), ("m", "million"), ("bn", "billion")]))
    dec = c(cardinal_core(), cross(".", "point"), digit_string("zero"))
    parts = [
        c(pre, one, insert(sg), opt(cents)),
        c(pre, other, insert(pl), opt(cents)),
        c(pre, string_map(only_rows)),
        weighted(c(pre, cross("0", "zero"), insert(pl), cents), VARIANT),
        c(pre, u(cardinal_core(), dec), scale, insert(pl)),
    ]
    if lenient:
        parts.append(weighted(c(pre, one, insert(pl), opt(cents)), LENIENT))
        parts.append(weighted(c(pre, other, insert(sg), opt(cents)), LENIENT))
        parts.append(weighted(c(pre, cardinal_core(), cross(".", "point"), digit_string("o"),
                                insert(pl)), LENIENT))
    return finish(u(*parts))


# telephone


def _pair_map() -> Fst:
    rows = []
    for n in range(100):
        s = "%02d" % n
        rows.extend((s, text, w) for text, w in num.pair_readings(s))
    return string_map(rows)


def _phone_group(n: int, lenient: bool) -> Fst:
    readings = [_digits_exact(n, "zero")]
    pairs = _pair_map()
    if n == 2:
        readings.append(weighted(pairs, VARIANT))
    elif n == 3:
        readings.append(weighted(c(_digits_exact(1, "zero"), pairs), VARIANT))
    elif n == 4:
        readings.append(weighted(c(pairs, pairs), VARIANT))
        readings.append(weighted(c(string_map([(d, num.ONES[int(d)]) for d in "123456789"]),
                                   cross("000", "thousand")), VARIANT))
    if lenient:
        rows = [("%0*d" % (n, k), num.cardinal_words(k)) for k in range(10 ** (n - 1), 10 ** n)]
        readings.append(weighted(string_map(rows), LENIENT))
    return u(*readings)


@lru_cache(maxsize=None)
def telephone(lenient: bool = False) -> Fst:
    group = u(*[_phone_group(n, lenient) for n in (2, 3, 4)])
    sep = u(delete("-"), delete(" "), delete("."))
    country = c(u(delete("+"), cross("+", "plus", VARIANT), insert("")),
                u(*[_digits_exact(n, "zero") for n in (1, 2, 3)]), sep)
    area = u(c(group, sep), c(delete("("), group, delete(")"), u(delete(" "), insert(""))))
    rest = u(group, c(group, sep, group), c(group, sep, group, sep, group))
    return finish(c(opt(country), area, rest))


# time

_AMPM = [("am", "a m"), ("a.m.", "a m"), ("a.m", "a m"), ("pm", "p m"), ("p.m.", "p m"),
         ("p.m", "p m")]


def _hours(lo: int, hi: int) -> Fst:
    rows = []
    for h in range(lo, hi + 1):
        rows.append((str(h), num.cardinal_words(h)))
        if h < 10:
            rows.append(("%02d" % h, num.cardinal_words(h)))
    return string_map(rows)


def _minutes(on_the_hour: list[tuple[str, float]]) -> Fst:
    rows = [("00", text, w) for text, w in on_the_hour]
    for n in range(1, 60):
        s = "%02d" % n
        if n < 10:
            rows.append((s, f"o {num.ONES[n]}", 0.0))
            rows.append((s, f"zero {num.ONES[n]}", VARIANT))
        else:
            rows.append((s, num.two_digit(n), 0.0))
    return string_map(rows)


@lru_cache(maxsize=None)
def time(lenient: bool = False) -> Fst:
    colon = delete(":")
    gap = u(delete(" "), insert(""))
    ampm = string_map(_AMPM)
    if lenient:
        # "am" said as one word: odd, but nothing is lost
        ampm = u(ampm, weighted(string_map([(w, r.replace(" ", "")) for w, r in _AMPM]), LENIENT))
    parts = [
        c(_hours(0, 23), colon, _minutes([("o'clock", 0.0), ("", VARIANT), ("hundred", VARIANT)])),
        c(_hours(1, 12), colon, _minutes([("", 0.0), ("o'clock", VARIANT)]), gap, ampm),
        c(_hours(1, 12), gap, ampm),
    ]
    if lenient:
        parts.append(weighted(c(_hours(0, 23), cross(":", "colon"), _minutes([("zero zero", 0.0)]),
                                opt(c(gap, ampm))), LENIENT))
        parts.append(weighted(c(_hours(0, 23), colon, _small_cardinals(0, 59)), LENIENT))
    return finish(u(*parts))


# dates


def _days_in(month: int) -> int:
    return 29 if month == 2 else calendar.monthrange(2001, month)[1]


def _numeric_forms(n: int) -> list[str]:
    return [str(n)] + (["%02d" % n] if n < 10 else [])


def _name_forms(m: int) -> list[str]:
    forms = [MONTHS[m - 1]]
    for abbr in MONTH_ABBR[m]:
        if abbr != MONTHS[m - 1]:
            forms += [abbr, abbr + ".", abbr + " ."]
    return forms


def _day_map(m: int, suffixed: bool, readings: tuple[str, ...]) -> Fst:
    rows = []
    for d in range(1, _days_in(m) + 1):
        forms = _numeric_forms(d)
        if suffixed:
            forms = forms + [str(d) + num.ordinal_suffix(d)]
        for form in forms:
            for kind in readings:
                if kind == "ordinal":
                    rows.append((form, num.ordinal_words(d), 0.0))
                elif kind == "cardinal":
                    rows.append((form, num.cardinal_words(d), LENIENT))
                elif kind == "digits" and form.isdigit():
                    rows.append((form, " ".join(num.digit_word(ch, "zero") for ch in form),
                                 LENIENT))
    return string_map(rows)


def _alt_month_readings(m: int, form: str, numeric: bool) -> list[str]:
    """Recoverable but infelicitous month readings (lenient only)."""
    if numeric:
        return [num.cardinal_words(m)]
    if form != MONTHS[m - 1]:
        return [" ".join(form.replace(".", " .").split())]
    return []


# spoken templates for month-day dates
_STRICT_TEMPLATES = {
    "M D": ("month", "day"),
    "M the D": ("month", "the", "day"),
    "the D of M": ("the", "day", "of", "month"),
}
_LENIENT_TEMPLATES = {
    "D M": ("day", "month"),
    "D of M": ("day", "of", "month"),
    "the D M": ("the", "day", "month"),
}


def _spoken(template: tuple[str, ...], month_text: str, day: Fst) -> Fst:
    words = [month_text if w == "month" else w for w in template]
    k = template.index("day")
    return c(insert(" ".join(words[:k])), day, insert(" ".join(words[k + 1:])))


def _date_md(numeric_month: bool, order: str, sep: Fst, suffixed: bool, lenient: bool,
             canonical: str) -> Fst:
    """Month-and-day dates; ``order`` is the written order, "md" or "dm".

    Branching per written month lets the spoken order differ from the written
    one: the month is deleted on the input side and its name inserted wherever
    the template puts it.
    """
    templates = dict(_STRICT_TEMPLATES)
    if lenient:
        templates.update(_LENIENT_TEMPLATES)
    kinds = ("ordinal", "cardinal") if lenient else ("ordinal",)

    def attach(forms: list[str], spoken: Fst) -> Fst:
        month = c(u(*[delete(f) for f in forms]))
        return c(month, sep, spoken) if order == "md" else c(spoken, sep, month)

    branches = []
    for m in range(1, 13):
        day = _day_map(m, suffixed, kinds)
        forms = _numeric_forms(m) if numeric_month else _name_forms(m)
        readings = []
        for name, template in templates.items():
            if name == canonical:
                w = 0.0
            else:
                w = VARIANT if name in _STRICT_TEMPLATES else LENIENT
            readings.append(weighted(_spoken(template, MONTHS[m - 1], day), w))
        branches.append(attach(forms, u(*readings)))
        if lenient:
            for form in forms:
                for alt in _alt_month_readings(m, form, numeric_month):
                    alts = [weighted(_spoken(_STRICT_TEMPLATES["M D"], alt, day), LENIENT),
                            weighted(_spoken(_LENIENT_TEMPLATES["D M"], alt, day), LENIENT)]
                    branches.append(attach([form], u(*alts)))
    return u(*branches)


def _year_rows(lo: int, hi: int) -> list[tuple[str, str, float]]:
    rows = []
    for y in range(lo, hi + 1):
        rows.extend((str(y), text, w) for text, w in num.year_readings(y))
    return rows


@lru_cache(maxsize=None)
def year(digits: int | None = None) -> Fst:
    lo, hi = (1, 9999) if digits is None else (10 ** (digits - 1), 10 ** digits - 1)
    return finish(string_map(_year_rows(lo, hi)))


def _short_year() -> Fst:
    rows = []
    for n in range(100):
        s = "%02d" % n
        rows.extend((s, text, w) for text, w in num.pair_readings(s) if text != "hundred")
    return string_map(rows)


@lru_cache(maxsize=None)
def date(lenient: bool = False) -> Fst:
    space = delete(" ")
    slash, dash, dot = delete("/"), delete("-"), delete(".")
    month_names = string_map([(f, MONTHS[m - 1]) for m in range(1, 13) for f in _name_forms(m)])
    range_sep = u(cross(" - ", "-"), cross("-", "-"), cross(" – ", "-"), cross("–", "-"),
                  cross(" - ", "to", VARIANT), cross("-", "to", VARIANT))
    numeric_slash = _date_md(True, "md", slash, False, lenient, "M D")
    day_month = _date_md(False, "dm", space, True, lenient, "the D of M")
    month_day = _date_md(False, "md", space, True, lenient, "M D")
    # everything that may be followed by a year shares one year machine
    before_year = u(
        c(numeric_slash, slash),
        c(_date_md(True, "md", dash, False, lenient, "M D"), dash),
        c(_date_md(True, "md", dot, False, lenient, "M D"), dot),
        c(day_month, space),
        c(month_day, u(space, delete(", "), delete(","))),
        insert(""),
    )
    with_year = c(before_year, u(year(), _short_year()),
                  opt(c(range_sep, u(_short_year(), year(4)))))
    parts = [numeric_slash, day_month, month_day, with_year, c(month_names, space, year(4))]
    if lenient:
        digits = digit_string("zero")
        parts.append(weighted(c(digits, u(slash, dash, dot), digits,
                                opt(c(u(slash, dash, dot), year()))), LENIENT))
    return finish(u(*parts))


# letters and electronic

_ELECTRONIC_SYMBOLS = [(".", "dot", 0.0), ("/", "slash", 0.0), (":", "colon", 0.0),
                       ("-", "dash", 0.0), ("-", "hyphen", VARIANT), ("_", "underscore", 0.0),
                       ("@", "at", 0.0), ("~", "tilde", 0.0), ("?", "question mark", 0.0),
                       ("=", "equals", 0.0), ("&", "and", 0.0), ("&", "ampersand", VARIANT),
                       ("#", "hash", 0.0), ("%", "percent", 0.0), ("+", "plus", 0.0)]
_ELECTRONIC_WORDS = ["com", "org", "net", "edu", "gov", "info", "html", "www", "mail"]


@lru_cache(maxsize=None)
def electronic(lenient: bool = False) -> Fst:
    rows = [(ch, ch, 0.0) for ch in LETTERS]
    rows += [(d, num.ONES[int(d)], 0.0) for d in DIGITS]
    rows += [("0", "o", VARIANT)]
    rows += _ELECTRONIC_SYMBOLS
    rows += [(w, w, VARIANT) for w in _ELECTRONIC_WORDS]
    if lenient:
        rows += [(".", "point", LENIENT), (".", "period", LENIENT)]
    return finish(fst.plus_closure(string_map(rows)))


@lru_cache(maxsize=None)
def letters(lenient: bool = False) -> Fst:
    # punctuation is deleted together with a letter so every step emits a word
    rows = [(ch + tail, ch, 0.0) for ch in LETTERS for tail in ("", ".", "'")]
    rows += [("&", "and", 0.0)]
    rows += [(ch * 2, f"double {ch}", VARIANT) for ch in LETTERS]
    rows += [(ch * 3, f"triple {ch}", VARIANT) for ch in LETTERS]
    if lenient:
        rows += [(".", "dot", LENIENT)]
    return finish(fst.plus_closure(string_map(rows)))


# open-vocabulary classes: machines depend on the words of the query


def self_map(text: str) -> Fst:
    return string_map([(text, text)])


@lru_cache(maxsize=None)
def verbatim_lexicon() -> Fst:
    rows = []
    seen = set()
    for written, reading in data_rows("verbatim.tsv"):
        rows.append((written, reading, VARIANT if written in seen else 0.0))
        seen.add(written)
    return string_map(rows)


def verbatim(text: str, lenient: bool = False) -> Fst:
    known = {r[0] for r in data_rows("verbatim.tsv")}
    parts = [verbatim_lexicon()]
    if " " not in text and text not in known:
        parts.append(self_map(text))
    elif " " not in text and lenient:
        # the symbol left as is: nothing lost, but not a reading
        parts.append(weighted(self_map(text), LENIENT))
    return finish(u(*parts))


_STREET_ABBR = {"st": "street", "st.": "street", "ave": "avenue", "ave.": "avenue",
                "rd": "road", "rd.": "road", "blvd": "boulevard", "dr": "drive",
                "ln": "lane", "ct": "court", "hwy": "highway", "apt": "apartment",
                "n": "north", "s": "south", "e": "east", "w": "west", "ne": "northeast",
                "nw": "northwest", "se": "southeast", "sw": "southwest"}


@lru_cache(maxsize=None)
def house_number(lenient: bool = False) -> Fst:
    """House numbers up to 9999: pairwise reading first, cardinal and digits as variants."""
    rows = []
    for n in range(1, 10000):
        s = str(n)
        card = num.cardinal_words(n)
        if len(s) >= 3 and s[-2:] != "00":
            pair = f"{num.cardinal_words(int(s[:-2]))} {num.pair_readings(s[-2:])[0][0]}"
            rows.append((s, pair, 0.0))
            rows.append((s, card, VARIANT))
        else:
            rows.append((s, card, 0.0))
            if len(s) == 4 and s[-2:] == "00" and s[1] != "0":
                rows.append((s, f"{num.cardinal_words(int(s[:2]))} hundred", VARIANT))
    spelled = weighted(c(digit_map("zero"), digit_string("zero")), VARIANT)
    return finish(u(string_map(rows), spelled))


def address(vocab: frozenset[str], lenient: bool = False) -> Fst:
    rows = [(w, w, 0.0) for w in vocab
            if w and w not in _STREET_ABBR and not any(ch.isdigit() for ch in w)]
    for abbr, full in _STREET_ABBR.items():
        rows.append((abbr, full, 0.0))
        rows.append((abbr, abbr.rstrip("."), VARIANT))
    word = string_map(rows)
    words = c(word, fst.closure(c(delete(" "), word)))
    return finish(c(house_number(lenient), delete(" "), words))
