import json
from itertools import product
from pathlib import Path

import pytest

from sl2friezes.dynkin import (
    FunctionKind,
    Graph,
    Growth,
    Kind,
    additive_function,
    cartan_matrix,
    check_function,
    classify_by_cartan,
    classify_graph,
    dynkin_diagram,
    extended_diagram,
    predict_growth,
)
from sl2friezes.errors import DomainError, HasLoop, NotAcyclic, NotConnected
from sl2friezes.quiver import frieze_numeric, frieze_period, make_quiver

DATA = Path(__file__).resolve().parent.parent / "data"


def path(n):
    names = [str(i) for i in range(1, n + 1)]
    return Graph.build(names, list(zip(names, names[1:])))


def star(k):
    return Graph.build(["c"] + [f"l{i}" for i in range(k)], [("c", f"l{i}") for i in range(k)])


def test_classify_examples():
    assert classify_graph(path(5)).name == "A5"
    tri = Graph.build("123", [("1", "2"), ("2", "3"), ("3", "1")])
    c = classify_graph(tri)
    assert (c.kind, c.name) == (Kind.EXTENDED, "A2~")
    assert classify_graph(star(4)).name == "D4~"
    assert classify_graph(star(5)).kind is Kind.NEITHER
    assert classify_graph(Graph.build(["v"], [])).name == "A1"


def test_classify_rejects_bad_graphs():
    with pytest.raises(NotConnected):
        classify_graph(Graph.build("1234", [("1", "2"), ("3", "4")]))
    with pytest.raises(HasLoop):
        Graph.build("12", [("1", "1")])


def test_index_conventions():
    for fam, n in [("A", 4), ("D", 6), ("E", 7)]:
        c = classify_graph(extended_diagram(fam, n))
        assert len(c.graph.vertices) == c.index + 1
        c = classify_graph(dynkin_diagram(fam if fam != "A" else "A", n))
        assert len(c.graph.vertices) == c.index
    with pytest.raises(DomainError):
        dynkin_diagram("E", 9)
    with pytest.raises(DomainError):
        extended_diagram("A", 1)


def test_neither_shapes():
    # E9-like tree (legs 1, 2, 6), a tree with a degree-4 vertex and a long leg,
    # and a cycle with a chord
    assert classify_graph(Graph.build(*_star_edges([1, 2, 6]))).kind is Kind.NEITHER
    assert classify_graph(Graph.build(*_star_edges([1, 1, 1, 2]))).kind is Kind.NEITHER
    chord = Graph.build("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("1", "3")])
    assert classify_graph(chord).kind is Kind.NEITHER


def _star_edges(legs):
    verts, edges = ["c"], []
    for i, length in enumerate(legs):
        prev = "c"
        for j in range(length):
            v = f"{i}_{j}"
            verts.append(v)
            edges.append((prev, v))
            prev = v
    return verts, edges


def test_additive_function_examples():
    e6 = classify_graph(extended_diagram("E", 6))
    f = additive_function(e6)
    assert sorted(f.values()) == sorted([1, 2, 3, 2, 1, 2, 1])
    assert 2 * f["c"] == sum(f[w] for w in e6.graph.neighbors("c")) == 6
    a4 = classify_graph(extended_diagram("A", 4))
    assert set(additive_function(a4).values()) == {1}
    e8 = classify_graph(extended_diagram("E", 8))
    f8 = additive_function(e8)
    assert 2 * f8["c"] == 12 == sum(f8[w] for w in e8.graph.neighbors("c"))
    assert sorted(f8[w] for w in e8.graph.neighbors("c")) == [3, 4, 5]
    with pytest.raises(DomainError):
        additive_function(classify_graph(path(3)))


def test_check_function_examples():
    assert check_function(path(4), {v: 1 for v in "1234"}) is FunctionKind.SUBADDITIVE_NOT_ADDITIVE
    assert check_function(path(3), {"1": 1, "2": 3, "3": 1}) is FunctionKind.NOT_SUBADDITIVE
    with pytest.raises(DomainError):
        check_function(path(2), {"1": 1, "2": 0})
    with pytest.raises(DomainError):
        check_function(path(2), {"1": 1})


def test_cartan_examples():
    assert cartan_matrix(path(2)) == [[2, -1], [-1, 2]]
    tri = extended_diagram("A", 2)
    assert all(sum(row) == 0 for row in cartan_matrix(tri))
    e6 = classify_graph(extended_diagram("E", 6))
    h = additive_function(e6)
    c = cartan_matrix(e6.graph)
    vec = [h[v] for v in e6.graph.vertices]
    assert [sum(a * b for a, b in zip(row, vec)) for row in c] == [0] * 7
    assert all(c[i][j] == c[j][i] for i in range(7) for j in range(7))


def test_restriction_of_additive_function_is_strict():
    for fam, n in [("A", 3), ("A", 6), ("D", 4), ("D", 7), ("E", 6), ("E", 7), ("E", 8)]:
        c = classify_graph(extended_diagram(fam, n))
        g, f = c.graph, additive_function(c)
        for v in g.vertices:
            rest = [w for w in g.vertices if w != v]
            sub = Graph.build(rest, [e for e in g.sorted_edges() if v not in e])
            assert check_function(sub, {w: f[w] for w in rest}) is FunctionKind.SUBADDITIVE_NOT_ADDITIVE
        for e in g.sorted_edges():
            sub = Graph.build(g.vertices, [d for d in g.sorted_edges() if d != e])
            assert check_function(sub, f) is FunctionKind.SUBADDITIVE_NOT_ADDITIVE


def test_cartan_oracle_on_standard_diagrams():
    for fam, n in [("A", 7), ("D", 5), ("E", 6), ("E", 8)]:
        assert classify_by_cartan(dynkin_diagram(fam, n)).kind is Kind.DYNKIN
        assert classify_by_cartan(extended_diagram(fam, n)).kind is Kind.EXTENDED
    assert classify_by_cartan(star(5)).kind is Kind.NEITHER


def test_graph_json():
    obj = json.loads((DATA / "e6tilde.json").read_text())
    g = Graph.from_json(obj)
    assert Graph.from_json(g.to_json()) == g
    c = classify_graph(g)
    assert c.to_json() == {"type": "Extended", "name": "E6~", "family": "E", "index": 6}


def _all_orientations(vertices, edges):
    for bits in product((0, 1), repeat=len(edges)):
        yield make_quiver(vertices, [(u, v) if b else (v, u) for (u, v), b in zip(edges, bits)])


def test_predict_growth_examples():
    a3 = make_quiver("123", [("1", "2"), ("3", "2")])
    assert predict_growth(a3).growth is Growth.PERIODIC_BOUNDED
    a2t = make_quiver("123", [("1", "2"), ("1", "3"), ("3", "2")])
    assert predict_growth(a2t).growth is Growth.UNBOUNDED_RATIONAL
    s5 = make_quiver("c12345", [("c", str(i)) for i in range(1, 6)])
    p = predict_growth(s5)
    assert p.growth is Growth.CONJECTURED_IRRATIONAL and p.conjectural
    kron = make_quiver("12", [("1", "2", 2)])
    assert predict_growth(kron).growth is Growth.UNBOUNDED_RATIONAL
    assert predict_growth(make_quiver("12", [("1", "2", 3)])).growth is Growth.CONJECTURED_IRRATIONAL
    with pytest.raises(NotAcyclic):
        predict_growth(make_quiver("123", [("1", "2"), ("2", "3"), ("3", "1")]))
    with pytest.raises(NotConnected):
        predict_growth(make_quiver("123", [("1", "2")]))


def test_periodic_prediction_matches_friezes():
    cases = [
        ("12", [("1", "2")]),
        ("123", [("1", "2"), ("2", "3")]),
        ("c123", [("c", "1"), ("c", "2"), ("c", "3")]),
    ]
    for vertices, edges in cases:
        for q in _all_orientations(vertices, edges):
            assert predict_growth(q).growth is Growth.PERIODIC_BOUNDED
            assert frieze_period(frieze_numeric(q, 40)) is not None
