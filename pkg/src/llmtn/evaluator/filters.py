"""Text filters applied to model output before comparison."""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources


def _data_lines(name: str) -> list[str]:
    text = resources.files("llmtn.evaluator").joinpath("data").joinpath(name).read_text("utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


@lru_cache(maxsize=None)
def boilerplate_patterns(extra: tuple[str, ...] = ()) -> tuple[re.Pattern, re.Pattern]:
    alt = "|".join(f"(?:{p})" for p in _data_lines("boilerplate.txt") + list(extra))
    # a phrase counts only as its own clause: followed by punctuation or the end
    head = re.compile(rf"^\s*(?:{alt})\s*(?:[.!:,]+\s*|$)", re.IGNORECASE)
    tail = re.compile(rf"(?:^|(?<=[.!?:]))\s*(?:{alt})\s*[.!]*\s*$", re.IGNORECASE)
    return head, tail


@lru_cache(maxsize=None)
def artifact_patterns() -> tuple[re.Pattern, ...]:
    return tuple(re.compile(p, re.IGNORECASE) for p in _data_lines("artifacts.txt"))


def _squash(text: str) -> str:
    return " ".join(text.split())


def strip_insertions(raw: str, extra: tuple[str, ...] = ()) -> str:
    """Remove boilerplate clauses at either end, repeatedly, and collapse whitespace."""
    head, tail = boilerplate_patterns(extra)
    text = _squash(raw)
    while True:
        new = _squash(tail.sub("", head.sub("", text, count=1), count=1))
        if new == text:
            return text
        text = new


@lru_cache(maxsize=None)
def uk_us() -> dict[str, str]:
    table = {}
    for line in _data_lines("uk_us.tsv"):
        uk, us = line.split("\t")
        table[uk] = us
    return table


_WORD = re.compile(r"[A-Za-z]+")


def normalize_spelling(text: str, table: dict[str, str] | None = None) -> str:
    """Replace UK spellings with US ones, keeping a leading capital."""
    table = uk_us() if table is None else table

    def swap(m: re.Match) -> str:
        word = m.group(0)
        us = table.get(word.lower())
        if us is None:
            return word
        return us.capitalize() if word[0].isupper() else us

    return _WORD.sub(swap, text)


ARTICLES = frozenset({"a", "an", "the"})
_PUNCT = ".,;:!?\"“”()[]{}…"
_SPLIT = re.compile("([" + re.escape(_PUNCT) + "])")
_TERMINAL = frozenset(".,;:!?…")


def normalize_punct_articles(text: str) -> str:
    """Comparison-only canonical form.

    Lowercases, spaces punctuation off words, drops the articles a/an/the and
    trims trailing punctuation.
    """
    words = [w for w in _SPLIT.sub(r" \1 ", text.lower()).split() if w not in ARTICLES]
    while words and all(ch in _TERMINAL for ch in words[-1]):
        words.pop()
    return " ".join(words)


def canonical(text: str) -> str:
    return normalize_punct_articles(normalize_spelling(text))
