import math
import random

import pytest
from hypothesis import given, strategies as st

from llmtn import fst
from oracle import (k_best, random_machine, rel_compose, rel_concat, rel_project, rel_star,
                    rel_union, relation, table)

weights = st.one_of(st.integers(0, 50).map(float), st.just(math.inf))


@given(weights, weights, weights)
def test_semiring_laws(a, b, c):
    P, T = fst.plus, fst.times
    assert P(a, b) == P(b, a)
    assert P(P(a, b), c) == P(a, P(b, c))
    assert T(T(a, b), c) == T(a, T(b, c))
    assert T(a, P(b, c)) == P(T(a, b), T(a, c))
    assert P(a, fst.ZERO) == a and T(a, fst.ONE) == a


def words(*w):
    return tuple(w)


def test_concat_of_acceptors():
    syms = fst.SymbolTable("w", ["three", "twelve"])
    m = fst.concat(fst.acceptor(syms, ["three"]), fst.acceptor(syms, ["twelve"]))
    assert relation(m) == {(words("three", "twelve"), words("three", "twelve")): 0.0}


def test_closure_accepts_empty_and_repeats():
    syms = fst.SymbolTable("w", ["x"])
    m = fst.closure(fst.acceptor(syms, ["x"]))
    rel = relation(m, bound=2)
    assert set(rel) == {((), ()), (("x",), ("x",)), (("x", "x"), ("x", "x"))}
    assert all(w == 0 for w in rel.values())


def test_union_with_empty_is_identity():
    rng = random.Random(1)
    syms = table()
    a = random_machine(rng, syms)
    assert relation(fst.union(a, fst.empty(syms))) == relation(a)


def test_compose_with_identity():
    rng = random.Random(2)
    syms = table()
    a = random_machine(rng, syms)
    ident = fst.closure(fst.union_all([fst.acceptor(syms, [s]) for s in "abc"]))
    assert relation(fst.compose(a, ident)) == relation(a)


def test_compose_rejects_mismatched_tables():
    a = fst.acceptor(fst.SymbolTable("x", ["p"]), ["p"])
    b = fst.acceptor(fst.SymbolTable("y", ["q"]), ["q"])
    with pytest.raises(fst.SymbolMismatch):
        fst.compose(a, b)
    with pytest.raises(fst.SymbolMismatch):
        fst.union(a, b)


@pytest.mark.parametrize("seed", range(25))
def test_random_algebra_matches_oracle(seed):
    rng = random.Random(seed)
    syms = table()
    a, b = random_machine(rng, syms), random_machine(rng, syms)
    ra, rb = relation(a), relation(b)
    assert relation(fst.union(a, b)) == rel_union(ra, rb)
    assert relation(fst.concat(a, b)) == rel_concat(ra, rb, 6)
    assert relation(fst.compose(a, b)) == rel_compose(ra, rb)
    assert relation(fst.closure(a), 4) == rel_star(relation(a, 4), 4)
    assert relation(fst.project(a, "output")) == rel_project(ra, "output")
    assert relation(fst.invert(a)) == {(y, x): w for (x, y), w in ra.items()}
    assert relation(fst.connect(a)) == ra
    assert relation(fst.rmepsilon(a)) == ra
    assert fst.shortest_path(a, 3) == k_best(ra, 3)


@pytest.mark.parametrize("seed", range(10))
def test_cyclic_union_concat(seed):
    rng = random.Random(1000 + seed)
    syms = table()
    a = random_machine(rng, syms, acyclic=False)
    b = random_machine(rng, syms, acyclic=False)
    ra, rb = relation(a, 4), relation(b, 4)
    assert relation(fst.union(a, b), 4) == rel_union(ra, rb)
    assert relation(fst.concat(a, b), 4) == rel_concat(ra, rb, 4)


@pytest.mark.parametrize("seed", range(10))
def test_compose_associative(seed):
    rng = random.Random(2000 + seed)
    syms = table()
    a, b, c = (random_machine(rng, syms, max_states=4) for _ in range(3))
    left = fst.compose(fst.compose(a, b), c)
    right = fst.compose(a, fst.compose(b, c))
    assert relation(left) == relation(right)


@pytest.mark.parametrize("seed", range(15))
def test_apply_and_accepts_match_relation(seed):
    rng = random.Random(3000 + seed)
    syms = table()
    a = random_machine(rng, syms)
    rel = relation(a)
    inputs = {x for x, _ in rel} | {("a",), ("b", "c")}
    for x in inputs:
        want = {y: w for (xx, y), w in rel.items() if xx == x}
        got = fst.apply_symbols(a, list(x))
        assert got == want
        # apply equals compose with the input's identity acceptor, projected
        lin = fst.acceptor(syms, list(x))
        proj = rel_project(relation(fst.compose(lin, a)), "output")
        assert {y: w for (y, _), w in proj.items()} == want
        for y in want:
            assert fst.accepts(a, list(x), list(y))
    assert not fst.accepts(a, ["a"] * 7, [])


def test_shortest_path_basics():
    syms = fst.SymbolTable("w", ["x", "y"])
    one = fst.acceptor(syms, ["x"])
    assert fst.shortest_path(one, 1) == [(("x",), ("x",), 0.0)]
    two = fst.union(fst.acceptor(syms, ["x"], 2.0), fst.acceptor(syms, ["y"], 1.0))
    assert fst.shortest_path(two, 1) == [(("y",), ("y",), 1.0)]
    assert fst.shortest_path(fst.empty(syms), 3) == []


def test_accepts_unknown_output_is_false():
    syms = fst.SymbolTable("w", ["x"])
    m = fst.acceptor(syms, ["x"])
    assert not fst.accepts(m, ["x"], ["never-seen"])
    assert not fst.accepts(fst.empty(syms), ["x"], ["x"])


def test_apply_unknown_symbol_names_it():
    syms = fst.SymbolTable("w", ["x"])
    with pytest.raises(fst.UnknownSymbol, match="zzz"):
        fst.apply_symbols(fst.acceptor(syms, ["x"]), ["zzz"])


def test_epsilon_cycle_hits_guard():
    syms = fst.SymbolTable("w", ["x"])
    m = fst.Fst(syms)
    q = m.add_state()
    m.set_start(q)
    m.add_arc(q, 0, 1, 0.0, q)
    m.set_final(q)
    with pytest.raises(fst.GrammarDesignError):
        fst.apply(m, [])


def test_negative_weights_rejected():
    m = fst.Fst(table())
    q = m.add_state()
    with pytest.raises(fst.FstError):
        m.add_arc(q, 1, 1, -1.0, q)
    with pytest.raises(fst.FstError):
        m.set_final(q, -0.5)


def test_att_round_trip():
    rng = random.Random(5)
    syms = table()
    a = random_machine(rng, syms, acyclic=False)
    text = fst.to_att(a)
    b = fst.from_att(text, table())
    assert relation(b, 4) == relation(a, 4)
    assert fst.symbols_from_text(fst.symbols_to_text(syms)) == syms
