"""Weighted finite-state transducers over the tropical semiring.

Machines are built with ``add_state``/``add_arc``/``set_final`` and treated as
immutable values afterwards: every operation in this module returns a new
machine and never touches its arguments.

Labels are integer ids into :class:`SymbolTable` objects; id 0 is epsilon in
every table.
"""

from __future__ import annotations

import heapq
import itertools
import math
import threading
from collections.abc import Iterable, Sequence

EPS = 0
EPS_SYMBOL = "<eps>"

ZERO = math.inf
ONE = 0.0


def plus(a: float, b: float) -> float:
    return a if a <= b else b


def times(a: float, b: float) -> float:
    return a + b


class FstError(Exception):
    pass


class SymbolMismatch(FstError):
    pass


class UnknownSymbol(FstError):
    def __init__(self, symbol):
        super().__init__(f"unknown symbol: {symbol!r}")
        self.symbol = symbol


class GrammarDesignError(FstError):
    """Raised when a search exceeds the path-length guard (usually an epsilon cycle)."""


class SymbolTable:
    """Append-only interning table. Ids never change once assigned."""

    def __init__(self, name: str = "", symbols: Iterable[str] = ()):
        self.name = name
        self._ids = {EPS_SYMBOL: EPS}
        self._syms = [EPS_SYMBOL]
        self._lock = threading.Lock()
        for s in symbols:
            self.add(s)

    def add(self, symbol: str) -> int:
        i = self._ids.get(symbol)
        if i is not None:
            return i
        with self._lock:
            i = self._ids.get(symbol)
            if i is None:
                i = len(self._syms)
                self._syms.append(symbol)
                self._ids[symbol] = i
            return i

    def find(self, symbol: str) -> int | None:
        return self._ids.get(symbol)

    def symbol(self, i: int) -> str:
        return self._syms[i]

    def __contains__(self, symbol) -> bool:
        return symbol in self._ids

    def __len__(self) -> int:
        return len(self._syms)

    def __iter__(self):
        return iter(enumerate(self._syms))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SymbolTable):
            return NotImplemented
        return self._syms == other._syms

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"SymbolTable({self.name!r}, {len(self)} symbols)"

    def copy(self, name: str | None = None) -> SymbolTable:
        return SymbolTable(self.name if name is None else name, self._syms[1:])

    def encode(self, symbols: Sequence[str], strict: bool = True) -> list[int] | None:
        out = []
        for s in symbols:
            i = self._ids.get(s)
            if i is None:
                if strict:
                    raise UnknownSymbol(s)
                return None
            out.append(i)
        return out

    def decode(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(self._syms[i] for i in ids if i != EPS)


def _compatible(a: SymbolTable, b: SymbolTable) -> bool:
    return a is b or a == b


class Fst:
    """A weighted transducer. ``arcs(q)`` yields ``(ilabel, olabel, weight, dst)``."""

    def __init__(self, isyms: SymbolTable, osyms: SymbolTable | None = None):
        self.isyms = isyms
        self.osyms = isyms if osyms is None else osyms
        self.start = -1
        self._arcs: list[list[tuple[int, int, float, int]]] = []
        self._finals: dict[int, float] = {}
        self._index = self._bounds = None

    # construction

    def add_state(self) -> int:
        self._arcs.append([])
        self._index = self._bounds = None
        return len(self._arcs) - 1

    def add_states(self, n: int) -> int:
        first = len(self._arcs)
        self._arcs.extend([] for _ in range(n))
        self._index = self._bounds = None
        return first

    def set_start(self, q: int) -> None:
        self._check_state(q)
        self.start = q

    def set_final(self, q: int, weight: float = ONE) -> None:
        self._check_state(q)
        if weight < 0 or math.isnan(weight):
            raise FstError(f"negative or NaN weight {weight}")
        if weight == ZERO:
            self._finals.pop(q, None)
        else:
            self._finals[q] = weight
        self._bounds = None

    def add_arc(self, src: int, ilabel: int, olabel: int, weight: float, dst: int) -> None:
        if weight < 0 or math.isnan(weight):
            raise FstError(f"negative or NaN weight {weight}")
        self._check_state(src)
        self._check_state(dst)
        if not (0 <= ilabel < len(self.isyms)) or not (0 <= olabel < len(self.osyms)):
            raise FstError(f"label out of range on arc {src}->{dst}")
        self._arcs[src].append((ilabel, olabel, weight, dst))
        self._index = self._bounds = None

    def _check_state(self, q: int) -> None:
        if not 0 <= q < len(self._arcs):
            raise FstError(f"invalid state {q}")

    # inspection

    @property
    def num_states(self) -> int:
        return len(self._arcs)

    def states(self) -> range:
        return range(len(self._arcs))

    def arcs(self, q: int) -> list[tuple[int, int, float, int]]:
        return self._arcs[q]

    def final(self, q: int) -> float:
        return self._finals.get(q, ZERO)

    @property
    def finals(self) -> dict[int, float]:
        return dict(self._finals)

    def num_arcs(self) -> int:
        return sum(len(a) for a in self._arcs)

    def is_empty(self) -> bool:
        return self.start < 0 or not self._finals

    def __repr__(self):
        return f"<Fst {self.num_states} states, {self.num_arcs()} arcs>"

    def _by_ilabel(self):
        if self._index is None:
            index = []
            for arcs in self._arcs:
                d: dict[int, list] = {}
                for il, ol, w, nxt in arcs:
                    d.setdefault(il, []).append((ol, w, nxt))
                index.append(d)
            self._index = index
        return self._index

    def _input_bounds(self) -> tuple[list[float], list[float]]:
        """Per state, the fewest and most input symbols left on a path to a final state.

        Unreachable-to-final states get (inf, -inf); states that can reach a
        cycle get an unbounded maximum. Used to prune searches.
        """
        if self._bounds is None:
            self._bounds = (_min_remaining(self), _max_remaining(self))
        return self._bounds

    def _copy_into(self, dest: Fst) -> int:
        offset = dest.add_states(self.num_states)
        for q, arcs in enumerate(self._arcs):
            dest._arcs[offset + q].extend((i, o, w, n + offset) for i, o, w, n in arcs)
        return offset

    def copy(self) -> Fst:
        out = Fst(self.isyms, self.osyms)
        self._copy_into(out)
        out.start = self.start
        out._finals = dict(self._finals)
        return out


def _min_remaining(a: Fst) -> list[float]:
    rev: list[list[tuple[int, int]]] = [[] for _ in a._arcs]
    for q, arcs in enumerate(a._arcs):
        for il, _, _, n in arcs:
            rev[n].append((q, 0 if il == EPS else 1))
    dist = [math.inf] * len(a._arcs)
    heap = []
    for q in a._finals:
        dist[q] = 0
        heap.append((0, q))
    heapq.heapify(heap)
    while heap:
        d, q = heapq.heappop(heap)
        if d > dist[q]:
            continue
        for p, c in rev[q]:
            if d + c < dist[p]:
                dist[p] = d + c
                heapq.heappush(heap, (d + c, p))
    return dist


def _max_remaining(a: Fst) -> list[float]:
    n = len(a._arcs)
    out = [-math.inf] * n
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, 0)]
        state[root] = 1
        while stack:
            q, k = stack[-1]
            arcs = a._arcs[q]
            if k < len(arcs):
                stack[-1] = (q, k + 1)
                nxt = arcs[k][3]
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, 0))
                elif state[nxt] == 1:
                    out[q] = math.inf
                continue
            stack.pop()
            state[q] = 2
            best = 0 if q in a._finals else -math.inf
            for il, _, _, nxt in arcs:
                v = out[nxt] + (0 if il == EPS else 1)
                if v > best:
                    best = v
            out[q] = max(out[q], best)
    # states on a cycle were marked before their successors finished; spread inf backwards
    rev: list[list[int]] = [[] for _ in range(n)]
    for q, arcs in enumerate(a._arcs):
        for _, _, _, nxt in arcs:
            rev[nxt].append(q)
    stack = [q for q in range(n) if out[q] == math.inf]
    while stack:
        q = stack.pop()
        for p in rev[q]:
            if out[p] != math.inf:
                out[p] = math.inf
                stack.append(p)
    return out


def empty(isyms: SymbolTable, osyms: SymbolTable | None = None) -> Fst:
    """The machine accepting nothing (one non-final start state)."""
    f = Fst(isyms, osyms)
    f.set_start(f.add_state())
    return f


def epsilon_machine(isyms: SymbolTable, osyms: SymbolTable | None = None) -> Fst:
    f = Fst(isyms, osyms)
    q = f.add_state()
    f.set_start(q)
    f.set_final(q)
    return f


def linear(isyms: SymbolTable, osyms: SymbolTable, ilabels: Sequence[int],
           olabels: Sequence[int], weight: float = ONE) -> Fst:
    """A single path pairing the two label sequences position by position."""
    f = Fst(isyms, osyms)
    n = max(len(ilabels), len(olabels))
    first = f.add_states(n + 1)
    f.set_start(first)
    for k in range(n):
        il = ilabels[k] if k < len(ilabels) else EPS
        ol = olabels[k] if k < len(olabels) else EPS
        f.add_arc(first + k, il, ol, ONE, first + k + 1)
    f.set_final(first + n, weight)
    return f


def acceptor(syms: SymbolTable, symbols: Sequence[str], weight: float = ONE) -> Fst:
    ids = [syms.add(s) for s in symbols]
    return linear(syms, syms, ids, ids, weight)


def _check_same(a: Fst, b: Fst, op: str) -> None:
    if not _compatible(a.isyms, b.isyms) or not _compatible(a.osyms, b.osyms):
        raise SymbolMismatch(f"{op}: symbol tables differ")


# rational operations


def union(a: Fst, b: Fst) -> Fst:
    _check_same(a, b, "union")
    out = Fst(a.isyms, a.osyms)
    s = out.add_state()
    out.set_start(s)
    for m in (a, b):
        if m.start < 0:
            continue
        off = m._copy_into(out)
        out.add_arc(s, EPS, EPS, ONE, m.start + off)
        for q, w in m._finals.items():
            out._finals[q + off] = w
    return out


def union_all(machines: Sequence[Fst]) -> Fst:
    if not machines:
        raise FstError("union of no machines")
    first = machines[0]
    out = Fst(first.isyms, first.osyms)
    s = out.add_state()
    out.set_start(s)
    for m in machines:
        _check_same(first, m, "union")
        if m.start < 0:
            continue
        off = m._copy_into(out)
        out.add_arc(s, EPS, EPS, ONE, m.start + off)
        for q, w in m._finals.items():
            out._finals[q + off] = w
    return out


def concat(a: Fst, b: Fst) -> Fst:
    _check_same(a, b, "concat")
    out = Fst(a.isyms, a.osyms)
    if a.start < 0 or b.start < 0:
        out.set_start(out.add_state())
        return out
    off_a = a._copy_into(out)
    off_b = b._copy_into(out)
    out.start = a.start + off_a
    for q, w in a._finals.items():
        out.add_arc(q + off_a, EPS, EPS, w, b.start + off_b)
    for q, w in b._finals.items():
        out._finals[q + off_b] = w
    return out


def concat_all(machines: Sequence[Fst]) -> Fst:
    out = machines[0]
    for m in machines[1:]:
        out = concat(out, m)
    return out


def closure(a: Fst) -> Fst:
    """Kleene star; the empty string is accepted at weight 0."""
    out = Fst(a.isyms, a.osyms)
    s = out.add_state()
    out.set_start(s)
    out.set_final(s)
    if a.start < 0:
        return out
    off = a._copy_into(out)
    out.add_arc(s, EPS, EPS, ONE, a.start + off)
    for q, w in a._finals.items():
        out._finals[q + off] = w
        out.add_arc(q + off, EPS, EPS, w, a.start + off)
    return out


def plus_closure(a: Fst) -> Fst:
    return concat(a, closure(a))


def optional(a: Fst) -> Fst:
    return union(a, epsilon_machine(a.isyms, a.osyms))


def project(a: Fst, side: str) -> Fst:
    if side not in ("input", "output"):
        raise ValueError(f"side must be 'input' or 'output', not {side!r}")
    table = a.isyms if side == "input" else a.osyms
    out = Fst(table, table)
    out.add_states(a.num_states)
    for q, arcs in enumerate(a._arcs):
        if side == "input":
            out._arcs[q] = [(i, i, w, n) for i, _, w, n in arcs]
        else:
            out._arcs[q] = [(o, o, w, n) for _, o, w, n in arcs]
    out.start = a.start
    out._finals = dict(a._finals)
    return out


def invert(a: Fst) -> Fst:
    out = Fst(a.osyms, a.isyms)
    out.add_states(a.num_states)
    for q, arcs in enumerate(a._arcs):
        out._arcs[q] = [(o, i, w, n) for i, o, w, n in arcs]
    out.start = a.start
    out._finals = dict(a._finals)
    return out


def reweight(a: Fst, extra: float) -> Fst:
    """Add a constant to every final weight (shifts every path weight)."""
    out = a.copy()
    out._finals = {q: w + extra for q, w in a._finals.items()}
    return out


# structural cleanup


def connect(a: Fst) -> Fst:
    """Keep only states that lie on some start-to-final path."""
    if a.start < 0:
        return empty(a.isyms, a.osyms)
    seen = {a.start}
    stack = [a.start]
    while stack:
        q = stack.pop()
        for _, _, _, n in a._arcs[q]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    rev: dict[int, list[int]] = {}
    for q in seen:
        for _, _, _, n in a._arcs[q]:
            rev.setdefault(n, []).append(q)
    live = {q for q in a._finals if q in seen}
    stack = list(live)
    while stack:
        q = stack.pop()
        for p in rev.get(q, ()):
            if p not in live:
                live.add(p)
                stack.append(p)
    if a.start not in live:
        return empty(a.isyms, a.osyms)
    order = sorted(live)
    remap = {q: k for k, q in enumerate(order)}
    out = Fst(a.isyms, a.osyms)
    out.add_states(len(order))
    for q in order:
        out._arcs[remap[q]] = [(i, o, w, remap[n]) for i, o, w, n in a._arcs[q] if n in remap]
    out.start = remap[a.start]
    out._finals = {remap[q]: w for q, w in a._finals.items() if q in remap}
    return out


def _eps_distances(a: Fst, q: int) -> dict[int, float]:
    dist = {q: ONE}
    heap = [(ONE, q)]
    done = set()
    while heap:
        d, p = heapq.heappop(heap)
        if p in done:
            continue
        done.add(p)
        for i, o, w, n in a._arcs[p]:
            if i == EPS and o == EPS:
                nd = d + w
                if nd < dist.get(n, ZERO):
                    dist[n] = nd
                    heapq.heappush(heap, (nd, n))
    return dist


def rmepsilon(a: Fst) -> Fst:
    """Remove epsilon:epsilon arcs, keeping the weighted relation unchanged."""
    out = Fst(a.isyms, a.osyms)
    out.add_states(a.num_states)
    out.start = a.start
    for q in a.states():
        has_eps = any(i == EPS and o == EPS for i, o, _, _ in a._arcs[q])
        if not has_eps:
            out._arcs[q] = list(a._arcs[q])
            if q in a._finals:
                out._finals[q] = a._finals[q]
            continue
        best: dict[tuple[int, int, int], float] = {}
        fw = ZERO
        for p, d in _eps_distances(a, q).items():
            if p in a._finals:
                fw = min(fw, d + a._finals[p])
            for i, o, w, n in a._arcs[p]:
                if i == EPS and o == EPS:
                    continue
                key = (i, o, n)
                nw = d + w
                if nw < best.get(key, ZERO):
                    best[key] = nw
        out._arcs[q] = [(i, o, w, n) for (i, o, n), w in best.items()]
        if fw < ZERO:
            out._finals[q] = fw
    return connect(out)


def optimize(a: Fst) -> Fst:
    return rmepsilon(a)


# composition


def compose(a: Fst, b: Fst) -> Fst:
    """Relational composition with a sequencing epsilon filter.

    Filter state 0 allows a's output-epsilon moves, b's input-epsilon moves
    and matches; once b has moved alone (state 1) a may not move alone until
    the next match, so each epsilon interleaving is produced exactly once.
    """
    if not _compatible(a.osyms, b.isyms):
        raise SymbolMismatch("compose: output table of the left machine differs "
                             "from the input table of the right machine")
    out = Fst(a.isyms, b.osyms)
    if a.start < 0 or b.start < 0:
        out.set_start(out.add_state())
        return out
    bidx = b._by_ilabel()
    ids: dict[tuple[int, int, int], int] = {}
    queue = []

    def state(key):
        s = ids.get(key)
        if s is None:
            s = out.add_state()
            ids[key] = s
            queue.append(key)
        return s

    out.start = state((a.start, b.start, 0))
    while queue:
        key = queue.pop()
        q1, q2, f = key
        src = ids[key]
        if q1 in a._finals and q2 in b._finals:
            out._finals[src] = a._finals[q1] + b._finals[q2]
        arcs_out = out._arcs[src]
        b_here = bidx[q2]
        for il, ol, w1, n1 in a._arcs[q1]:
            if ol == EPS:
                if f == 0:
                    arcs_out.append((il, EPS, w1, state((n1, q2, 0))))
                continue
            for ol2, w2, n2 in b_here.get(ol, ()):
                arcs_out.append((il, ol2, w1 + w2, state((n1, n2, 0))))
        for ol2, w2, n2 in b_here.get(EPS, ()):
            arcs_out.append((EPS, ol2, w2, state((q1, n2, 1))))
    return connect(out)


# search


def _path_guard(n: int) -> int:
    return 4 * n + 16


def apply(a: Fst, ilabels: Sequence[int], max_results: int | None = None,
          guard: int | None = None) -> dict[tuple[int, ...], float]:
    """Transduce one input label sequence; returns output label tuples to min weight.

    Equivalent to composing the input's linear acceptor with ``a``, projecting
    to the output side and enumerating; done here as a memoized search over
    (state, input position) pairs. Paths longer than ``guard`` arcs (default
    four per input symbol plus 16) raise GrammarDesignError.
    """
    if a.start < 0:
        return {}
    idx = a._by_ilabel()
    lo, hi = a._input_bounds()
    finals = a._finals
    n = len(ilabels)
    guard = _path_guard(n) if guard is None else guard
    memo: dict[tuple[int, int], dict[tuple[int, ...], float]] = {}
    active: set[tuple[int, int]] = set()

    def visit(q: int, i: int, depth: int) -> dict[tuple[int, ...], float]:
        key = (q, i)
        got = memo.get(key)
        if got is not None:
            return got
        if key in active or depth > guard:
            raise GrammarDesignError(
                f"path longer than {guard} arcs while transducing {n} symbols")
        active.add(key)
        res: dict[tuple[int, ...], float] = {}
        if i == n and q in finals:
            res[()] = finals[q]
        d = idx[q]
        moves = []
        if i < n:
            moves.extend((ol, w, nxt, i + 1) for ol, w, nxt in d.get(ilabels[i], ()))
        moves.extend((ol, w, nxt, i) for ol, w, nxt in d.get(EPS, ()))
        for ol, w, nxt, j in moves:
            if not lo[nxt] <= n - j <= hi[nxt]:
                continue
            sub = visit(nxt, j, depth + 1)
            for suffix, sw in sub.items():
                out = (ol,) + suffix if ol != EPS else suffix
                tw = w + sw
                if tw < res.get(out, ZERO):
                    res[out] = tw
            if max_results is not None and len(res) > max_results:
                raise FstError(f"more than {max_results} outputs")
        active.discard(key)
        memo[key] = res
        return res

    return visit(a.start, 0, 0)


def apply_symbols(a: Fst, symbols: Sequence[str], max_results: int | None = None
                  ) -> dict[tuple[str, ...], float]:
    """Like :func:`apply` but with symbol strings; unknown input symbols raise."""
    ids = a.isyms.encode(symbols)
    res = apply(a, ids, max_results)
    return {a.osyms.decode(k): w for k, w in res.items()}


def accepts(a: Fst, isymbols: Sequence[str], osymbols: Sequence[str]) -> bool:
    """Membership of the pair in the machine's relation; unknown symbols give False."""
    ins = a.isyms.encode(isymbols, strict=False)
    outs = a.osyms.encode(osymbols, strict=False)
    if ins is None or outs is None or a.start < 0:
        return False
    return _accepts_ids(a, ins, outs)


def _accepts_ids(a: Fst, ins: Sequence[int], outs: Sequence[int]) -> bool:
    ni, no = len(ins), len(outs)
    lo, hi = a._input_bounds()
    seen = {(a.start, 0, 0)}
    stack = [(a.start, 0, 0)]
    while stack:
        q, i, j = stack.pop()
        if i == ni and j == no and q in a._finals:
            return True
        for il, ol, _, nxt in a._arcs[q]:
            if il != EPS:
                if i >= ni or ins[i] != il:
                    continue
                i2 = i + 1
            else:
                i2 = i
            if ol != EPS:
                if j >= no or outs[j] != ol:
                    continue
                j2 = j + 1
            else:
                j2 = j
            key = (nxt, i2, j2)
            if key not in seen and lo[nxt] <= ni - i2 <= hi[nxt]:
                seen.add(key)
                stack.append(key)
    return False


def shortest_path(a: Fst, k: int = 1, tie_cap: int = 1000
                  ) -> list[tuple[tuple[str, ...], tuple[str, ...], float]]:
    """The k best (input, output) pairs of the relation, ascending by weight.

    Equal weights are ordered by output then input string. When more than
    ``tie_cap`` pairs tie with the k-th weight only the first ``tie_cap`` found
    take part in the ordering.
    """
    if k <= 0 or a.start < 0:
        return []
    counter = itertools.count()
    heap = [(ONE, next(counter), a.start, (), ())]
    seen_cfg = set()
    emitted: dict[tuple, float] = {}
    results = []
    kth = None
    while heap:
        w, _, q, ins, outs = heapq.heappop(heap)
        if kth is not None and (w > kth or len(results) >= k + tie_cap):
            break
        if q == -1:
            if (ins, outs) in emitted:
                continue
            emitted[(ins, outs)] = w
            results.append((ins, outs, w))
            if len(results) == k:
                kth = w
            continue
        cfg = (q, ins, outs)
        if cfg in seen_cfg:
            continue
        seen_cfg.add(cfg)
        fw = a._finals.get(q)
        if fw is not None:
            heapq.heappush(heap, (w + fw, next(counter), -1, ins, outs))
        for il, ol, aw, nxt in a._arcs[q]:
            ni = ins + (il,) if il != EPS else ins
            no = outs + (ol,) if ol != EPS else outs
            if (nxt, ni, no) not in seen_cfg:
                heapq.heappush(heap, (w + aw, next(counter), nxt, ni, no))
    decoded = [(a.isyms.decode(i), a.osyms.decode(o), w) for i, o, w in results]
    decoded.sort(key=lambda r: (r[2], r[1], r[0]))
    return decoded[:k]


# text format

_ESCAPES = {" ": "<space>", "\t": "<tab>", "\n": "<newline>"}
_UNESCAPES = {v: k for k, v in _ESCAPES.items()}


def _esc(sym: str) -> str:
    return _ESCAPES.get(sym, sym)


def _unesc(tok: str) -> str:
    return _UNESCAPES.get(tok, tok)


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def to_att(a: Fst) -> str:
    """Arcs as ``src<TAB>dst<TAB>ilabel<TAB>olabel<TAB>weight``, then finals.

    The start state is written first, as in AT&T text files.
    """
    if a.start < 0:
        return ""
    order = [a.start] + [q for q in a.states() if q != a.start]
    num = {q: k for k, q in enumerate(order)}
    lines = []
    for q in order:
        for i, o, w, n in a._arcs[q]:
            lines.append("\t".join([str(num[q]), str(num[n]), _esc(a.isyms.symbol(i)),
                                    _esc(a.osyms.symbol(o)), _fmt_weight(w)]))
    for q in order:
        if q in a._finals:
            lines.append(f"{num[q]}\t{_fmt_weight(a._finals[q])}")
    return "\n".join(lines) + "\n"


def from_att(text: str, isyms: SymbolTable, osyms: SymbolTable | None = None) -> Fst:
    osyms = isyms if osyms is None else osyms
    f = Fst(isyms, osyms)
    rows = [ln.split("\t") for ln in text.splitlines() if ln.strip()]

    def ensure(q: int) -> None:
        while f.num_states <= q:
            f.add_state()

    for lineno, row in enumerate(rows, 1):
        if len(row) in (4, 5):
            src, dst = int(row[0]), int(row[1])
            ensure(max(src, dst))
            w = float(row[4]) if len(row) == 5 else ONE
            f.add_arc(src, isyms.add(_unesc(row[2])), osyms.add(_unesc(row[3])), w, dst)
        elif len(row) in (1, 2):
            q = int(row[0])
            ensure(q)
            f.set_final(q, float(row[1]) if len(row) == 2 else ONE)
        else:
            raise FstError(f"line {lineno}: expected 1, 2, 4 or 5 fields, got {len(row)}")
    if f.num_states:
        f.set_start(0)
    return f


def symbols_to_text(table: SymbolTable) -> str:
    return "".join(f"{_esc(s)}\t{i}\n" for i, s in table)


def symbols_from_text(text: str, name: str = "") -> SymbolTable:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FstError(f"line {lineno}: expected 'symbol<TAB>id'")
        pairs.append((int(parts[1]), _unesc(parts[0])))
    pairs.sort()
    if not pairs or pairs[0] != (0, EPS_SYMBOL):
        raise FstError("symbol id 0 must be <eps>")
    if [i for i, _ in pairs] != list(range(len(pairs))):
        raise FstError("symbol ids must be dense")
    return SymbolTable(name, [s for _, s in pairs[1:]])
