import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from oracles import frieze_plain
from reference_grids import FRISE_A2, KRONECKER
from sl2friezes.errors import HasLoop, HasTwoCycle, NotACycle, NotAcyclic
from sl2friezes.exact_algebra import LaurentPoly, RationalFunction
from sl2friezes.quiver import (
    Quiver,
    atilde_bridge,
    cycle_order,
    frieze_numeric,
    frieze_period,
    frieze_symbolic,
    initial_seed,
    make_quiver,
    mutate,
    mutate_seed,
    mutation_polynomial,
    orientation_word,
    substitute_ones,
)

DATA = Path(__file__).resolve().parent.parent / "data"
x1, x2, x3 = (LaurentPoly.var(f"x{i}") for i in (1, 2, 3))
A2 = make_quiver(["1", "2"], [("1", "2")])
A2T = make_quiver(["1", "2", "3"], [("1", "2"), ("1", "3"), ("3", "2")])
KRON = make_quiver(["1", "2"], [("1", "2", 2)])


@st.composite
def quivers(draw):
    n = draw(st.integers(2, 6))
    names = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.integers(-2, 2))
            if m > 0:
                arrows.append((names[i], names[j], m))
            elif m < 0:
                arrows.append((names[j], names[i], -m))
    return make_quiver(names, arrows)


def test_make_quiver():
    assert A2T.b("1", "2") == 1 and A2T.b("2", "3") == -1
    assert KRON.b("1", "2") == 2
    with pytest.raises(HasTwoCycle):
        make_quiver(["1", "2"], [("1", "2", 1), ("2", "1", 1)])
    with pytest.raises(HasLoop):
        make_quiver(["1"], [("1", "1")])
    with pytest.raises(KeyError):
        make_quiver(["1"], [("1", "2")])


def test_json_round_trip():
    for name in ("atilde2.json", "kronecker.json", "a3.json", "e6tilde_quiver.json", "d7tilde_quiver.json"):
        obj = json.loads((DATA / name).read_text())
        q = Quiver.from_json(obj)
        assert Quiver.from_json(q.to_json()) == q
    assert Quiver.from_json(json.loads((DATA / "atilde2.json").read_text())) == A2T


def test_mutation_examples():
    assert mutate(A2, "1") == make_quiver(["1", "2"], [("2", "1")])
    tri = make_quiver(["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")])
    assert mutate(tri, "2") == make_quiver(["1", "2", "3"], [("2", "1"), ("3", "2"), ("1", "3", 2)])
    assert mutate(mutate(tri, "2"), "2") == tri


@given(quivers())
def test_mutation_matches_arrow_description(q):
    """Compose paths through u, reverse arrows at u, cancel 2-cycles."""
    for u in q.vertices:
        count = {}
        for a, b, m in q.arrows():
            if u in (a, b):
                count[(b, a)] = count.get((b, a), 0) + m
            else:
                count[(a, b)] = count.get((a, b), 0) + m
        for a, m1 in q.incoming(u):
            for b, m2 in q.outgoing(u):
                count[(a, b)] = count.get((a, b), 0) + m1 * m2
        net = {}
        for (a, b), m in count.items():
            net[(a, b)] = net.get((a, b), 0) + m
            net[(b, a)] = net.get((b, a), 0) - m
        expected = make_quiver(q.vertices, [(a, b, m) for (a, b), m in net.items() if m > 0])
        assert mutate(q, u) == expected


@given(quivers())
def test_mutation_polynomial_is_invariant(q):
    for u in q.vertices:
        assert mutation_polynomial(q, u) == mutation_polynomial(mutate(q, u), u)


def test_mutation_polynomial_examples():
    assert mutation_polynomial(A2, "2") == x1 + 1
    assert mutation_polynomial(KRON, "1") == 1 + x2 ** 2


def test_seed_mutation():
    s = mutate_seed(initial_seed(A2), "1")
    assert RationalFunction(s.variable("1"), 1) == RationalFunction(1 + x2, x1)
    assert mutate_seed(s, "1") == initial_seed(A2)
    s = initial_seed(A2)
    for u in "12121":
        s = mutate_seed(s, u)
    assert set(s.cluster) == {x1, x2}


@given(quivers(), st.lists(st.integers(0, 5), max_size=4))
def test_seed_mutation_stays_laurent(q, path):
    s = initial_seed(q)
    for k in path:
        s = mutate_seed(s, q.vertices[k % len(q.vertices)])
    for v in q.vertices:
        s2 = mutate_seed(mutate_seed(s, v), v)
        assert s2 == s


def test_frieze_examples():
    fr = frieze_numeric(A2T, 5)
    for v, row in FRISE_A2.items():
        assert fr.sequence(v) == row
    assert (fr.value("2", 1) * fr.value("1", 2) + 1) // fr.value("3", 1) == 26
    k = frieze_numeric(KRON, 5)
    assert k.rows == KRONECKER
    interleaved = [x for pair in zip(k.rows["1"], k.rows["2"]) for x in pair]
    assert interleaved[1:6] == [1, 2, 5, 13, 34]
    with pytest.raises(NotAcyclic):
        frieze_numeric(make_quiver("123", [("1", "2"), ("2", "3"), ("3", "1")]), 3)


def test_frieze_backwards_is_consistent():
    fr = frieze_numeric(A2T, 4, back=4)
    again = frieze_numeric(A2T, 4)
    for v in A2T.vertices:
        assert fr.sequence(v, 0) == again.sequence(v)
        assert all(x > 0 for x in fr.rows[v])


def test_symbolic_frieze_examples():
    sym = frieze_symbolic(A2, 1)
    assert RationalFunction(sym.value("1", 1), 1) == RationalFunction(1 + x2, x1)
    sym = frieze_symbolic(A2T, 6)
    assert substitute_ones(sym).rows == frieze_numeric(A2T, 6).rows
    assert sym.coefficients_nonnegative()


def test_dynkin_friezes_are_periodic():
    for q in (A2, Quiver.from_json(json.loads((DATA / "a3.json").read_text()))):
        fr = frieze_numeric(q, 40)
        assert frieze_period(fr) is not None
    assert frieze_period(frieze_numeric(A2T, 20)) is None


@given(quivers())
def test_frieze_matches_plain_oracle(q):
    if not q.is_acyclic():
        return
    fr = frieze_numeric(q, 4)
    plain = frieze_plain(list(q.vertices), q.arrows(), 4)
    for v in q.vertices:
        assert fr.sequence(v) == plain[v]


def test_bridge_examples():
    rep = atilde_bridge(A2T, 15)
    assert rep.agrees and rep.predicted_fits
    assert rep.predicted.coefficients == (0, 52, 0, -1)
    assert rep.word in ("xxy", "xyx", "yxx")
    with pytest.raises(NotAcyclic):
        atilde_bridge(make_quiver("123", [("1", "2"), ("2", "3"), ("3", "1")]), 5)
    with pytest.raises(NotACycle):
        atilde_bridge(make_quiver("1234", [("1", "2"), ("2", "3"), ("2", "4")]), 5)
    with pytest.raises(NotACycle):
        atilde_bridge(make_quiver("12", [("1", "2")]), 5)


def test_cycle_walk():
    q = make_quiver("1234", [("1", "2"), ("3", "2"), ("3", "4"), ("1", "4")])
    walk = cycle_order(q)
    assert walk[0] == "1" and sorted(walk) == ["1", "2", "3", "4"]
    w = orientation_word(q, walk)
    assert w.count("x") >= w.count("y")
    assert atilde_bridge(q, 15).agrees
