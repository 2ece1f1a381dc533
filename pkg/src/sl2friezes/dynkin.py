"""Dynkin and extended Dynkin diagrams: recognition, additive functions,
Cartan matrices and the growth prediction for friezes."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping

from . import linalg
from .errors import DomainError, HasLoop, NotAcyclic, NotConnected
from .quiver import Quiver

Rational = int | Fraction


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with string vertex names."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise DomainError("duplicate vertex names")
        es = set()
        for e in self.edges:
            pair = frozenset(str(v) for v in e)
            if len(pair) != 2:
                raise HasLoop(f"self-loop at {sorted(pair)}")
            es.add(pair)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        for e in es:
            u, v = sorted(e)
            if u not in adj or v not in adj:
                raise DomainError(f"edge {u}-{v} uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def build(cls, vertices: Iterable[Any], edges: Iterable[Iterable[Any]]) -> "Graph":
        return cls(tuple(str(v) for v in vertices), frozenset(frozenset(str(v) for v in e) for e in edges))

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "Graph":
        return cls.build(obj["vertices"], obj.get("edges", []))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [sorted(e) for e in self.sorted_edges()]}

    def sorted_edges(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))  # type: ignore[return-value]

    def neighbors(self, v: str) -> set[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        todo = deque(seen)
        while todo:
            for w in self._adj[todo.popleft()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)


class Kind(enum.Enum):
    DYNKIN = "Dynkin"
    EXTENDED = "Extended"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Classification:
    """Result of :func:`classify_graph`.

    ``center`` is the branch vertex of a tree with exactly one, and ``legs``
    lists the vertex paths hanging off it (each starting next to the center),
    shortest first. For D-tilde both are filled from the first fork.
    """

    kind: Kind
    family: str | None = None
    index: int | None = None
    graph: Graph | None = None
    center: str | None = None
    legs: tuple[tuple[str, ...], ...] = ()
    cycle: tuple[str, ...] = ()

    @property
    def name(self) -> str | None:
        if self.family is None:
            return None
        base = f"{self.family}{self.index}"
        return base + "~" if self.kind is Kind.EXTENDED else base

    def to_json(self) -> dict:
        out: dict[str, Any] = {"type": self.kind.value}
        if self.family is not None:
            out.update(name=self.name, family=self.family, index=self.index)
        return out


# -- recognition -------------------------------------------------------------

def _legs(g: Graph, center: str) -> list[tuple[str, ...]]:
    legs = []
    for start in sorted(g.neighbors(center), key=g.vertices.index):
        path, prev, cur = [start], center, start
        while g.degree(cur) == 2:
            nxt = next(w for w in g.neighbors(cur) if w != prev)
            prev, cur = cur, nxt
            path.append(cur)
        legs.append(tuple(path))
    return sorted(legs, key=len)


def _cycle_walk(g: Graph) -> tuple[str, ...]:
    start = g.vertices[0]
    walk, prev = [start], None
    cur = start
    while True:
        nxt = min((w for w in g.neighbors(cur) if w != prev), key=g.vertices.index)
        if nxt == start:
            return tuple(walk)
        walk.append(nxt)
        prev, cur = cur, nxt


def classify_graph(g: Graph) -> Classification:
    """Decide whether a connected simple graph is Dynkin, extended Dynkin or
    neither, by the shape analysis behind the A-D-E classification."""
    if not g.is_connected():
        raise NotConnected("graph is not connected")
    n, m = len(g.vertices), len(g.edges)
    neither = Classification(Kind.NEITHER, graph=g)
    degs = {v: g.degree(v) for v in g.vertices}
    if m >= n:
        if m == n and all(d == 2 for d in degs.values()):
            return Classification(Kind.EXTENDED, "A", n - 1, g, cycle=_cycle_walk(g))
        return neither
    branch = [v for v in g.vertices if degs[v] >= 3]
    if not branch:
        return Classification(Kind.DYNKIN, "A", n, g)
    if max(degs.values()) >= 4:
        if n == 5 and degs[branch[0]] == 4:
            return Classification(Kind.EXTENDED, "D", 4, g, branch[0], tuple(_legs(g, branch[0])))
        return neither
    if len(branch) == 2:
        # a path with two leaves hanging off each end
        if all(sum(1 for w in g.neighbors(b) if degs[w] == 1) >= 2 for b in branch):
            return Classification(Kind.EXTENDED, "D", n - 1, g, branch[0], tuple(_legs(g, branch[0])))
        return neither
    if len(branch) > 2:
        return neither
    center = branch[0]
    legs = _legs(g, center)
    p, q, r = (len(leg) for leg in legs)

    def found(kind: Kind, family: str, index: int) -> Classification:
        return Classification(kind, family, index, g, center, tuple(legs))

    if p == 1 and q == 1:
        return found(Kind.DYNKIN, "D", n)
    if p == 1 and q == 2:
        if r <= 4:
            return found(Kind.DYNKIN, "E", n)
        if r == 5:
            return found(Kind.EXTENDED, "E", 8)
        return neither
    if (p, q, r) == (1, 3, 3):
        return found(Kind.EXTENDED, "E", 7)
    if (p, q, r) == (2, 2, 2):
        return found(Kind.EXTENDED, "E", 6)
    return neither


# -- canonical diagrams ----------------------------------------------------------

def _path(names: list[str]) -> list[tuple[str, str]]:
    return list(zip(names, names[1:]))


def _star(center: str, legs: list[int]) -> Graph:
    verts, edges = [center], []
    for i, length in enumerate(legs):
        names = [f"{chr(ord('a') + i)}{j}" for j in range(1, length + 1)]
        verts += names
        edges += _path([center] + names)
    return Graph.build(verts, edges)


def dynkin_diagram(family: str, n: int) -> Graph:
    """A_n (n >= 1), D_n (n >= 4), E6, E7, E8 with vertices named by position."""
    if family == "A" and n >= 1:
        names = [str(i) for i in range(1, n + 1)]
        return Graph.build(names, _path(names))
    if family == "D" and n >= 4:
        return _star("c", [1, 1, n - 3])
    if family == "E" and n in (6, 7, 8):
        return _star("c", [1, 2, n - 4])
    raise DomainError(f"no Dynkin diagram {family}{n}")


def extended_diagram(family: str, n: int) -> Graph:
    """Extended diagram of index n; it has n + 1 vertices."""
    if family == "A" and n >= 2:
        names = [str(i) for i in range(1, n + 2)]
        return Graph.build(names, _path(names) + [(names[-1], names[0])])
    if family == "D" and n == 4:
        return _star("c", [1, 1, 1, 1])
    if family == "D" and n >= 5:
        mid = [f"m{i}" for i in range(1, n - 2)]
        edges = _path(mid) + [("l1", mid[0]), ("l2", mid[0]), (mid[-1], "r1"), (mid[-1], "r2")]
        return Graph.build(["l1", "l2"] + mid + ["r1", "r2"], edges)
    if family == "E" and n in (6, 7, 8):
        return _star("c", {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}[n])
    raise DomainError(f"no simple extended Dynkin diagram {family}{n}~")


# -- additive functions --------------------------------------------------------

# Additive-function tables: center value, then values along each leg (legs shortest first).
ADDITIVE_TABLES: dict[str, tuple[int, tuple[tuple[int, ...], ...]]] = {
    "E6": (3, ((2, 1), (2, 1), (2, 1))),
    "E7": (4, ((2,), (3, 2, 1), (3, 2, 1))),
    "E8": (6, ((3,), (4, 2), (5, 4, 3, 2, 1))),
}


def additive_function(c: Classification) -> dict[str, int]:
    """The standard positive additive function of an extended diagram."""
    if c.kind is not Kind.EXTENDED or c.graph is None:
        raise DomainError("additive functions are tabulated for extended diagrams only")
    g = c.graph
    if c.family == "A":
        return {v: 1 for v in g.vertices}
    if c.family == "D":
        return {v: (1 if g.degree(v) == 1 else 2) for v in g.vertices}
    center_value, legs = ADDITIVE_TABLES[f"E{c.index}"]
    f = {c.center: center_value}
    for leg, values in zip(c.legs, legs):
        f.update(zip(leg, values))
    return f  # type: ignore[return-value]


class FunctionKind(enum.Enum):
    ADDITIVE = "Additive"
    SUBADDITIVE_NOT_ADDITIVE = "SubadditiveNotAdditive"
    NOT_SUBADDITIVE = "NotSubadditive"


def check_function(g: Graph, f: Mapping[str, Rational]) -> FunctionKind:
    """Compare 2 f(v) with the sum over the neighbours of v, exactly."""
    if any(v not in f for v in g.vertices):
        raise DomainError("function must be defined on every vertex")
    vals = {v: Fraction(f[v]) for v in g.vertices}
    if any(x <= 0 for x in vals.values()):
        raise DomainError("function must be positive")
    strict = False
    for v in g.vertices:
        diff = 2 * vals[v] - sum(vals[w] for w in g.neighbors(v))
        if diff < 0:
            return FunctionKind.NOT_SUBADDITIVE
        strict |= diff > 0
    return FunctionKind.SUBADDITIVE_NOT_ADDITIVE if strict else FunctionKind.ADDITIVE


def cartan_matrix(g: Graph) -> list[list[int]]:
    """2 on the diagonal, -1 for each edge, rows and columns in vertex order."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    n = len(pos)
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for e in g.edges:
        u, v = (pos[x] for x in e)
        c[u][v] = c[v][u] = -1
    return c


@dataclass(frozen=True)
class CartanVerdict:
    kind: Kind
    witness: dict[str, Fraction] | None


def classify_by_cartan(g: Graph) -> CartanVerdict:
    """Independent classifier based on linear algebra only.

    Extended when the Cartan kernel is a line spanned by a positive vector
    (an additive function). Dynkin when the Cartan matrix is invertible and
    C^-1 applied to the all-ones vector is positive (a subadditive function
    that is not additive). Otherwise neither.
    """
    if not g.is_connected():
        raise NotConnected("graph is not connected")
    c = cartan_matrix(g)
    n = len(c)
    kernel = linalg.nullspace(c)
    if kernel:
        if len(kernel) == 1:
            k = kernel[0]
            if all(x > 0 for x in k) or all(x < 0 for x in k):
                sign = 1 if k[0] > 0 else -1
                return CartanVerdict(Kind.EXTENDED, {v: sign * x for v, x in zip(g.vertices, k)})
        return CartanVerdict(Kind.NEITHER, None)
    f = linalg.solve(c, [1] * n)
    assert f is not None
    if all(x > 0 for x in f):
        return CartanVerdict(Kind.DYNKIN, dict(zip(g.vertices, f)))
    return CartanVerdict(Kind.NEITHER, None)


# -- growth prediction ---------------------------------------------------------

class Growth(enum.Enum):
    PERIODIC_BOUNDED = "PeriodicBounded"
    UNBOUNDED_RATIONAL = "UnboundedRational"
    CONJECTURED_IRRATIONAL = "ConjecturedIrrational"


@dataclass(frozen=True)
class GrowthPrediction:
    growth: Growth
    classification: Classification
    conjectural: bool

    def to_json(self) -> dict:
        return {
            "growth": self.growth.value,
            "classification": self.classification.to_json(),
            "conjectural": self.conjectural,
        }


def underlying_graph(q: Quiver) -> tuple[Graph, int]:
    """Underlying simple graph of a quiver and the largest edge multiplicity."""
    edges = q.underlying_edges()
    mult = max((m for _, _, m in edges), default=1)
    return Graph.build(q.vertices, [(u, v) for u, v, _ in edges]), mult


def predict_growth(q: Quiver) -> GrowthPrediction:
    """Expected behaviour of the frieze of an acyclic quiver.

    Dynkin gives periodic bounded sequences and extended Dynkin gives
    unbounded rational ones. The remaining case is only conjectured to be
    non-rational, which the result flags.
    """
    if not q.is_acyclic():
        raise NotAcyclic("frieze growth is predicted for acyclic quivers only")
    g, mult = underlying_graph(q)
    if not g.is_connected():
        raise NotConnected("underlying graph is not connected")
    if mult > 1:
        # The Kronecker quiver is the extended diagram A1~; any other
        # multiple edge contains it properly.
        if len(g.vertices) == 2 and mult == 2:
            c = Classification(Kind.EXTENDED, "A", 1, g)
            return GrowthPrediction(Growth.UNBOUNDED_RATIONAL, c, False)
        return GrowthPrediction(Growth.CONJECTURED_IRRATIONAL, Classification(Kind.NEITHER, graph=g), True)
    c = classify_graph(g)
    growth = {
        Kind.DYNKIN: Growth.PERIODIC_BOUNDED,
        Kind.EXTENDED: Growth.UNBOUNDED_RATIONAL,
        Kind.NEITHER: Growth.CONJECTURED_IRRATIONAL,
    }[c.kind]
    return GrowthPrediction(growth, c, c.kind is Kind.NEITHER)
