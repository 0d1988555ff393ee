"""Heuristic first-pass taxonomy labels for mismatches."""

from __future__ import annotations

import difflib

from ..corpus import is_non_english
from ..grammars import GrammarSet, default_grammars
from ..types import ErrorCategory, ErrorLabel, ErrorRecord, SemioticClass, Sentence, Token
from .align import MATCH, MISSING, UNVERIFIED, _keys, align, piece_key, pieces, token_target
from .filters import ARTICLES, artifact_patterns, strip_insertions

C = SemioticClass


def edit_distance(a: str, b: str) -> int:
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def is_fix_like(target: list[str], predicted: list[str]) -> bool:
    """Same word count and every changed word is a small edit of the original."""
    if len(target) != len(predicted) or not target:
        return False
    for a, b in zip(target, predicted):
        if a == b:
            continue
        common = len(_common_prefix(a, b))
        if edit_distance(a, b) > 2 and common < 3:
            return False
    return True


def _common_prefix(a: str, b: str) -> str:
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    return a[:k]


def _has_foreign_letters(text: str) -> bool:
    return any(ch.isalpha() and not ch.isascii() for ch in text)


def _content(keys: list[str]) -> list[int]:
    """Indices of keys that are neither articles nor punctuation."""
    return [k for k, w in enumerate(keys) if w not in ARTICLES and any(ch.isalnum() for ch in w)]


def _alternate_class_note(t: Token, span: str, grammars: GrammarSet) -> str | None:
    for other in (C.DATE, C.FRACTION, C.CARDINAL, C.DIGIT):
        if other is not t.cls and grammars.matches(other, t.written) \
                and grammars.is_recoverable(other, t.written, span):
            return f"prediction reads {t.written!r} as {other.value}; check the target class"
    return None


def prelabel(record: ErrorRecord, sentence: Sentence, grammars: GrammarSet | None = None
             ) -> ErrorLabel:
    grammars = grammars or default_grammars()
    tokens = sentence.tokens

    def label(cat, unrec=False, note=None):
        return ErrorLabel(cat, unrec, note=note)

    if is_non_english(sentence):
        return label(ErrorCategory.TRANSLATION)

    # target keys with their token index, prediction keys
    tkeys, towner = [], []
    for k, t in enumerate(tokens):
        for w in _keys(token_target(t)):
            tkeys.append(w)
            towner.append(k)
    found = pieces(record.prediction)
    pkeys = [piece_key(m.group(0)) for m in found]
    ti, pi = _content(tkeys), _content(pkeys)
    sm = difflib.SequenceMatcher(a=[tkeys[k] for k in ti], b=[pkeys[k] for k in pi],
                                 autojunk=False)
    regions = [op for op in sm.get_opcodes() if op[0] != "equal"]
    touched = sorted({towner[ti[k]] for _, i1, i2, _, _ in regions for k in range(i1, i2)})

    if any(_has_foreign_letters(tokens[k].written) for k in touched):
        return label(ErrorCategory.TRANSLATION)

    for pat in artifact_patterns():
        if pat.search(record.prediction) and not pat.search(record.target):
            return label(ErrorCategory.ARTIFACT)
    if strip_insertions(record.prediction) != " ".join(record.prediction.split()):
        return label(ErrorCategory.ARTIFACT)

    aligned = align(tokens, pkeys, grammars, lenient=True)
    if aligned is not None:
        changed = [k for k, v in enumerate(aligned.verdicts) if v not in (MATCH, MISSING)]
        bad = [k for k in changed if aligned.verdicts[k] == UNVERIFIED]
        if changed and not bad:
            return label(ErrorCategory.FORMAT)
        if bad:
            notes = []
            for k in bad:
                s, e = aligned.spans[k]
                note = _alternate_class_note(tokens[k], " ".join(pkeys[s:e]), grammars)
                if note:
                    notes.append(note)
            return label(ErrorCategory.OTHER, True, "; ".join(notes) or None)
        return label(ErrorCategory.OTHER)

    # a plain word is missing or changed: judge the non-plain tokens on their
    # mapped prediction spans and the rest as plain edits
    ranges = {}
    for k in touched:
        if tokens[k].cls.is_self_mapping:
            continue
        own = [c for c, q in enumerate(ti) if towner[q] == k]
        if own:
            lo, hi = _map_range(sm, own[0], own[-1] + 1)
            s = pi[lo] if lo < len(pi) else len(pkeys)
            e = pi[hi - 1] + 1 if hi > lo else s
            ranges[k] = (s, e)
    unrecoverable = False
    for group in _groups(sorted(ranges), tokens):
        s = min(ranges[k][0] for k in group)
        e = max(ranges[k][1] for k in group)
        sub = tokens[group[0]:group[-1] + 1]
        starts = [s, s - 1] if s > 0 and pkeys[s - 1] in ARTICLES else [s]
        if all(align(sub, pkeys[s0:e], grammars, lenient=True, allow_unverified=False) is None
               for s0 in starts):
            unrecoverable = True
    covered = {q for s, e in ranges.values() for q in range(s, e)}
    plain_changes = []
    for op, i1, i2, j1, j2 in regions:
        owners = {towner[ti[k]] for k in range(i1, i2)}
        if owners and all(k in ranges for k in owners) \
                and all(pi[k] in covered for k in range(j1, j2)):
            continue
        plain_changes.append(([tkeys[ti[k]] for k in range(i1, i2)],
                              [pkeys[pi[k]] for k in range(j1, j2)]))
    if plain_changes:
        if all(is_fix_like(tw, pw) for tw, pw in plain_changes):
            return label(ErrorCategory.FIX, unrecoverable)
        return label(ErrorCategory.PARAPHRASE, unrecoverable)
    if unrecoverable:
        return label(ErrorCategory.OTHER, True)
    return label(ErrorCategory.FORMAT)


def _map_range(sm: difflib.SequenceMatcher, a: int, b: int) -> tuple[int, int]:
    """Map a target index range onto the prediction through the diff opcodes."""
    lo = hi = None
    for op, i1, i2, j1, j2 in sm.get_opcodes():
        if lo is None and i1 <= a < i2:
            lo = j1 + (a - i1) if op == "equal" else j1
        if hi is None and i1 < b <= i2:
            hi = j1 + (b - i1) if op == "equal" else j2
    return lo or 0, max(hi or 0, lo or 0)


def _groups(ks: list[int], tokens) -> list[list[int]]:
    """Runs of non-plain tokens separated only by punctuation."""
    out: list[list[int]] = []
    for k in ks:
        if out and all(tokens[q].cls is C.PUNCT for q in range(out[-1][-1] + 1, k)):
            out[-1].append(k)
        else:
            out.append([k])
    return out


