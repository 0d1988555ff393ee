"""Small constructors for written-to-spoken grammars.

Written forms are character-level (``CHARS``), spoken forms are word-level
(``WORDS``). Both tables are shared by every grammar so machines compose.
"""

from __future__ import annotations

from collections.abc import Iterable

from .. import fst
from ..fst import EPS, Fst, SymbolTable

CHARS = SymbolTable("chars")
WORDS = SymbolTable("words")

VARIANT = 1.0
LENIENT = 10.0


def chars(text: str) -> list[str]:
    return list(text)


def words(text: str) -> list[str]:
    return text.split()


def cross(written: str, spoken: str, weight: float = 0.0) -> Fst:
    return fst.linear(CHARS, WORDS, [CHARS.add(c) for c in written],
                      [WORDS.add(w) for w in spoken.split()], weight)


def delete(written: str) -> Fst:
    return cross(written, "")


def insert(spoken: str, weight: float = 0.0) -> Fst:
    return cross("", spoken, weight)


def string_map(entries: Iterable[tuple[str, str] | tuple[str, str, float]]) -> Fst:
    """A trie over aligned (char, word) pairs; duplicate entries keep the lower weight."""
    m = Fst(CHARS, WORDS)
    root = m.add_state()
    m.set_start(root)
    children: dict[tuple[int, int, int], int] = {}
    finals: dict[int, float] = {}
    for entry in entries:
        written, spoken = entry[0], entry[1]
        weight = entry[2] if len(entry) > 2 else 0.0
        ins = [CHARS.add(c) for c in written]
        outs = [WORDS.add(w) for w in spoken.split()]
        q = root
        for k in range(max(len(ins), len(outs))):
            key = (q, ins[k] if k < len(ins) else EPS, outs[k] if k < len(outs) else EPS)
            nxt = children.get(key)
            if nxt is None:
                nxt = m.add_state()
                m.add_arc(q, key[1], key[2], 0.0, nxt)
                children[key] = nxt
            q = nxt
        if weight < finals.get(q, fst.ZERO):
            finals[q] = weight
    for q, w in finals.items():
        m.set_final(q, w)
    return _share_suffixes(m)


def _share_suffixes(m: Fst) -> Fst:
    """Merge trie states with identical futures (acyclic minimization by hashing)."""
    sig_id: dict[tuple, int] = {}
    state_sig: dict[int, int] = {}
    order = []
    stack = [m.start]
    while stack:
        q = stack.pop()
        order.append(q)
        stack.extend(n for _, _, _, n in m.arcs(q))
    for q in reversed(order):
        key = (m._finals.get(q), tuple(sorted((i, o, w, state_sig[n]) for i, o, w, n in m.arcs(q))))
        state_sig[q] = sig_id.setdefault(key, len(sig_id))
    out = Fst(m.isyms, m.osyms)
    out.add_states(len(sig_id))
    built = set()
    for q in order:
        s = state_sig[q]
        if s in built:
            continue
        built.add(s)
        if q in m._finals:
            out.set_final(s, m._finals[q])
        for i, o, w, n in m.arcs(q):
            out.add_arc(s, i, o, w, state_sig[n])
    out.set_start(state_sig[m.start])
    return out


def char_acceptor(alternatives: Iterable[str]) -> Fst:
    """CHARS-to-CHARS identity over the given strings."""
    m = Fst(CHARS, CHARS)
    root = m.add_state()
    m.set_start(root)
    children: dict[tuple[int, int], int] = {}
    for s in alternatives:
        q = root
        for c in s:
            i = CHARS.add(c)
            nxt = children.get((q, i))
            if nxt is None:
                nxt = m.add_state()
                m.add_arc(q, i, i, 0.0, nxt)
                children[(q, i)] = nxt
            q = nxt
        m.set_final(q)
    return m


def u(*machines: Fst) -> Fst:
    return fst.union_all(machines)


def c(*machines: Fst) -> Fst:
    return fst.concat_all(machines)


def opt(m: Fst, weight: float = 0.0) -> Fst:
    return fst.union(m, insert("", weight))


def weighted(m: Fst, weight: float) -> Fst:
    return fst.reweight(m, weight)


def finish(m: Fst) -> Fst:
    return fst.connect(m)
