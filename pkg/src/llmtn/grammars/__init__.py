"""Verbalization grammars: written token -> felicitous spoken readings, and back."""

from __future__ import annotations

import re
import threading
from functools import lru_cache

from .. import fst
from ..fst import Fst
from ..types import SemioticClass
from . import classes as K
from . import numbers as num
from .builder import CHARS, LENIENT, VARIANT, WORDS
from .classes import data_rows

__all__ = [
    "GrammarSet", "UnsupportedWritten", "default_grammars", "normalize_written",
    "verbalize_cardinal", "verbalize_year", "verbalize_ordinal", "verbalize_digit_string",
    "verbalize_decimal", "verbalize_fraction", "verbalize_money", "verbalize_measure",
    "verbalize_time", "verbalize_date", "verbalize_electronic", "verbalize_letters",
    "CHARS", "WORDS", "LENIENT", "VARIANT",
]

C = SemioticClass


class UnsupportedWritten(ValueError):
    def __init__(self, cls: SemioticClass, text: str):
        super().__init__(f"{cls.value} grammar does not cover {text!r}")
        self.cls = cls
        self.text = text


_STATIC = {
    C.CARDINAL: K.cardinal, C.ORDINAL: K.ordinal, C.DIGIT: K.digit, C.DECIMAL: K.decimal,
    C.FRACTION: K.fraction, C.TELEPHONE: K.telephone, C.TIME: K.time, C.MEASURE: K.measure,
    C.DATE: K.date, C.LETTERS: K.letters, C.ELECTRONIC: K.electronic,
}

_NUMERIC = {C.CARDINAL, C.DECIMAL, C.MONEY, C.MEASURE}
_GROUPING = re.compile(r"(?<=\d),(?=\d{3}(?!\d))")


def normalize_written(cls: SemioticClass, written: str) -> str:
    text = " ".join(written.lower().split())
    if cls in _NUMERIC:
        text = _GROUPING.sub("", text)
    return text


def load_patterns() -> dict[SemioticClass, list[re.Pattern]]:
    out: dict[SemioticClass, list[re.Pattern]] = {}
    for name, regex in data_rows("patterns.tsv"):
        out.setdefault(SemioticClass.parse(name), []).append(re.compile(regex))
    return out


@lru_cache(maxsize=None)
def _inverted(builder, lenient: bool) -> Fst:
    return fst.invert(builder(lenient))


@lru_cache(maxsize=4096)
def _open_forward(cls: SemioticClass, text: str, lenient: bool) -> Fst | None:
    if cls.is_self_mapping:
        return K.self_map(text)
    if cls is C.VERBATIM:
        return K.verbatim(text, lenient)
    if cls is C.ADDRESS:
        return K.address(frozenset(text.split()[1:]), lenient)
    rows = [r for r in K.currency_rows() if text.startswith(r[0])]
    if not rows:
        return None
    return fst.union_all([K.money_for(r, lenient) for r in rows])


@lru_cache(maxsize=4096)
def _open_inverse(cls: SemioticClass, spoken: str, lenient: bool) -> Fst | None:
    if cls.is_self_mapping:
        return fst.invert(K.self_map(spoken))
    if cls is C.VERBATIM:
        return fst.invert(K.verbatim(spoken, lenient))
    if cls is C.ADDRESS:
        return fst.invert(K.address(frozenset(spoken.split()), lenient))
    said = set(spoken.split())
    rows = [r for r in K.currency_rows() if said & set(r[1:])]
    if not rows:
        return None
    return fst.invert(fst.union_all([K.money_for(r, lenient) for r in rows]))


class GrammarSet:
    """Per-class forward and inverse grammars plus written-form patterns.

    Machines are built on first use and cached; after that the set is
    read-only, so concurrent lookups are safe.
    """

    def __init__(self):
        self.patterns = load_patterns()
        self._lock = threading.Lock()

    def matches(self, cls: SemioticClass, written: str) -> bool:
        if cls.is_self_mapping or cls is C.VERBATIM:
            return bool(written.strip())
        text = normalize_written(cls, written)
        return any(p.fullmatch(text) for p in self.patterns.get(cls, ()))

    def forward(self, cls: SemioticClass, written: str, lenient: bool = False) -> Fst | None:
        if cls in _STATIC:
            with self._lock:
                return _STATIC[cls](lenient)
        with self._lock:
            return _open_forward(cls, written, lenient)

    def inverse(self, cls: SemioticClass, spoken: str, lenient: bool = False) -> Fst | None:
        with self._lock:
            if cls in _STATIC:
                return _inverted(_STATIC[cls], lenient)
            return _open_inverse(cls, spoken, lenient)

    def readings(self, cls: SemioticClass, written: str, lenient: bool = False
                 ) -> list[tuple[str, float]]:
        """Readings sorted by weight, then text. Raises UnsupportedWritten."""
        if not self.matches(cls, written):
            raise UnsupportedWritten(cls, written)
        text = written.lower() if cls.is_self_mapping or cls is C.VERBATIM else \
            normalize_written(cls, written)
        machine = self.forward(cls, text, lenient)
        res = {}
        if machine is not None:
            try:
                res = fst.apply_symbols(machine, list(text))
            except fst.UnknownSymbol:
                res = {}
        if not res:
            raise UnsupportedWritten(cls, written)
        return sorted(((" ".join(o), w) for o, w in res.items()), key=lambda r: (r[1], r[0]))

    def felicity_set(self, cls: SemioticClass, written: str) -> set[str]:
        return {t for t, _ in self.readings(cls, written)}

    def canonical(self, cls: SemioticClass, written: str) -> str:
        return self.readings(cls, written)[0][0]

    def _accepts(self, cls: SemioticClass, written: str, spoken: str, lenient: bool) -> bool:
        if not self.matches(cls, written):
            return False
        text = written.lower() if cls.is_self_mapping or cls is C.VERBATIM else \
            normalize_written(cls, written)
        machine = self.forward(cls, text, lenient)
        return machine is not None and fst.accepts(machine, list(text), spoken.split())

    def is_felicitous(self, cls: SemioticClass, written: str, spoken: str) -> bool:
        return self._accepts(cls, written, spoken, False)

    def is_recoverable(self, cls: SemioticClass, written: str, spoken: str) -> bool:
        """True when ``spoken`` is felicitous or an infelicitous but recoverable reading."""
        return self._accepts(cls, written, spoken, True)

    def inverse_normalize(self, cls: SemioticClass, spoken: str, lenient: bool = False
                          ) -> set[str]:
        words = spoken.split()
        machine = self.inverse(cls, spoken, lenient)
        if machine is None or not words:
            return set()
        ids = WORDS.encode(words, strict=False)
        if ids is None:
            return set()
        # one spoken word can expand to many written characters
        guard = fst._path_guard(len(spoken))
        return {"".join(CHARS.decode(o)) for o in fst.apply(machine, ids, guard=guard)}


_default: GrammarSet | None = None
_default_lock = threading.Lock()


def default_grammars() -> GrammarSet:
    global _default
    with _default_lock:
        if _default is None:
            _default = GrammarSet()
        return _default


def verbalize_cardinal(n: int) -> str:
    if not 0 <= n <= num.MAX_CARDINAL:
        raise ValueError(f"cardinal out of range: {n}")
    return default_grammars().canonical(C.CARDINAL, str(n))


def verbalize_year(n: int) -> set[str]:
    if not 1 <= n <= 9999:
        raise ValueError(f"year out of range: {n}")
    res = fst.apply_symbols(K.year(), list(str(n)))
    return {" ".join(o) for o in res}


def verbalize_ordinal(n: int) -> str:
    if not 1 <= n < 10 ** 9:
        raise ValueError(f"ordinal out of range: {n}")
    return default_grammars().canonical(C.ORDINAL, f"{n}{num.ordinal_suffix(n)}")


def verbalize_digit_string(s: str) -> str:
    return default_grammars().canonical(C.DIGIT, s)


def verbalize_decimal(s: str) -> str:
    return default_grammars().canonical(C.DECIMAL, s)


def verbalize_fraction(s: str) -> set[str]:
    return default_grammars().felicity_set(C.FRACTION, s)


def verbalize_money(s: str) -> set[str]:
    return default_grammars().felicity_set(C.MONEY, s)


def verbalize_measure(s: str) -> set[str]:
    return default_grammars().felicity_set(C.MEASURE, s)


def verbalize_time(s: str) -> set[str]:
    return default_grammars().felicity_set(C.TIME, s)


def verbalize_date(s: str) -> set[str]:
    return default_grammars().felicity_set(C.DATE, s)


def verbalize_electronic(s: str) -> str:
    return default_grammars().canonical(C.ELECTRONIC, s)


def verbalize_letters(s: str) -> str:
    return default_grammars().canonical(C.LETTERS, s)
