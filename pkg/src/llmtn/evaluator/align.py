"""Aligning a predicted sentence to the corpus tokens, and felicity correction."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from ..grammars import GrammarSet, default_grammars
from ..types import SemioticClass, Sentence, Token
from .filters import normalize_spelling

_PIECE = re.compile(r"\w[\w'’-]*|[^\w\s]")

MATCH = "match"
FELICITOUS = "felicitous"
RECOVERABLE = "recoverable"
UNVERIFIED = "unverified"
MISSING = "missing"

_COST = {MATCH: 0.0, FELICITOUS: 0.0, RECOVERABLE: 1.0, UNVERIFIED: 100.0, MISSING: 0.001}


def pieces(text: str) -> list[re.Match]:
    return list(_PIECE.finditer(text))


def piece_key(word: str) -> str:
    return normalize_spelling(word.lower())


def token_target(t: Token) -> str:
    return t.written if t.cls is SemioticClass.PUNCT else t.spoken_target


@lru_cache(maxsize=65536)
def _keys(text: str) -> tuple[str, ...]:
    return tuple(piece_key(m.group(0)) for m in _PIECE.finditer(text))


@dataclass
class Alignment:
    spans: list[tuple[int, int]]
    verdicts: list[str]
    cost: float


def align(tokens: tuple[Token, ...] | list[Token], keys: list[str], grammars: GrammarSet,
          lenient: bool = False, allow_unverified: bool = True) -> Alignment | None:
    """Segment prediction pieces into one span per token.

    Plain tokens anchor the segmentation and must match exactly; punctuation
    tokens may be absent. Other tokens take a span that is their target, a
    felicitous reading, (with ``lenient``) a recoverable reading, or, at a
    high cost, anything at all. Returns the cheapest segmentation, preferring
    earlier anchors on ties, or None when the anchors cannot be placed.
    """
    n = len(keys)
    memo: dict[tuple[int, int], tuple[float, list] | None] = {}

    def verdict(t: Token, span: tuple[str, ...]) -> str | None:
        if span == _keys(token_target(t)):
            return MATCH
        if not span:
            return UNVERIFIED if allow_unverified else None
        text = " ".join(span)
        if grammars.is_felicitous(t.cls, t.written, text):
            return FELICITOUS
        if lenient and grammars.is_recoverable(t.cls, t.written, text):
            return RECOVERABLE
        return UNVERIFIED if allow_unverified else None

    def solve(k: int, p: int):
        if k == len(tokens):
            return (0.0, []) if p == n else None
        key = (k, p)
        if key in memo:
            return memo[key]
        t = tokens[k]
        target = _keys(token_target(t))
        options = []
        if t.cls is SemioticClass.PLAIN:
            if tuple(keys[p:p + len(target)]) == target:
                options.append((p + len(target), MATCH))
        elif t.cls is SemioticClass.PUNCT:
            if tuple(keys[p:p + len(target)]) == target:
                options.append((p + len(target), MATCH))
            options.append((p, MISSING))
        else:
            limit = min(n, p + 3 * len(target) + 6)
            for e in range(p, limit + 1):
                v = verdict(t, tuple(keys[p:e]))
                if v is not None:
                    options.append((e, v))
        best = None
        for e, v in options:
            rest = solve(k + 1, e)
            if rest is None:
                continue
            cost = _COST[v] + rest[0]
            if best is None or cost < best[0]:
                best = (cost, [((p, e), v)] + rest[1])
        memo[key] = best
        return best

    found = solve(0, 0)
    if found is None:
        return None
    return Alignment([s for s, _ in found[1]], [v for _, v in found[1]], found[0])


def felicity_correct(prediction: str, sentence: Sentence, grammars: GrammarSet | None = None
                     ) -> str:
    """Rewrite felicitous but non-target readings to the target reading.

    Text outside rewritten spans is left byte-for-byte alone. If the plain
    words of the sentence cannot be anchored the prediction is returned as is.
    """
    grammars = grammars or default_grammars()
    found = pieces(prediction)
    keys = [piece_key(m.group(0)) for m in found]
    result = align(sentence.tokens, keys, grammars)
    if result is None:
        return prediction
    out = prediction
    edits = []
    for t, (s, e), v in zip(sentence.tokens, result.spans, result.verdicts):
        if v == FELICITOUS and e > s:
            edits.append((found[s].start(), found[e - 1].end(), t.spoken_target))
    for start, end, text in sorted(edits, reverse=True):
        out = out[:start] + text + out[end:]
    return out
