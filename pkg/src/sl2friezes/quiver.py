"""Quivers, mutation, seeds and friezes."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Iterable, Sequence

from .errors import (
    HasLoop,
    HasTwoCycle,
    LaurentViolation,
    NonIntegralStep,
    NotACycle,
    NotAcyclic,
    NotDivisible,
    NotLaurent,
)
from .exact_algebra import LaurentPoly, RationalFunction, rf_normalize_to_laurent
from .linrec import Recursion, guess_recursion
from .tiling.frontier import Frontier, Tiling
from .words import mu


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Quiver:
    """A quiver without loops or 2-cycles, as an antisymmetric matrix.

    ``matrix[i][j]`` is the number of arrows from vertex i to vertex j,
    minus the number of arrows from j to i.
    """

    vertices: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex names")
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = len(verts)
        if len(mat) != n or any(len(r) != n for r in mat):
            raise ValueError("matrix shape does not match vertices")
        for i in range(n):
            if mat[i][i]:
                raise HasLoop(f"loop at {verts[i]}")
            for j in range(n):
                if mat[i][j] != -mat[j][i]:
                    raise ValueError("exchange matrix must be antisymmetric")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "matrix", mat)

    def index(self, v: Any) -> int:
        try:
            return self.vertices.index(str(v))
        except ValueError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def b(self, u: Any, v: Any) -> int:
        return self.matrix[self.index(u)][self.index(v)]

    def arrows(self) -> list[tuple[str, str, int]]:
        vs = self.vertices
        return [(vs[i], vs[j], m) for i, row in enumerate(self.matrix) for j, m in enumerate(row) if m > 0]

    def incoming(self, v: Any) -> list[tuple[str, int]]:
        j = self.index(v)
        return [(self.vertices[i], self.matrix[i][j]) for i in range(len(self.vertices)) if self.matrix[i][j] > 0]

    def outgoing(self, v: Any) -> list[tuple[str, int]]:
        i = self.index(v)
        return [(self.vertices[j], m) for j, m in enumerate(self.matrix[i]) if m > 0]

    def underlying_edges(self) -> list[tuple[str, str, int]]:
        """Unordered adjacent pairs with their arrow multiplicity."""
        return [(u, v, m) for u, v, m in self.arrows()]

    def topological_order(self) -> list[str]:
        """Sources first, ties broken by vertex name; raises NotAcyclic."""
        n = len(self.vertices)
        indeg = [sum(1 for i in range(n) if self.matrix[i][j] > 0) for j in range(n)]
        heap = [(self.vertices[j], j) for j in range(n) if indeg[j] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            _, i = heapq.heappop(heap)
            order.append(self.vertices[i])
            for j in range(n):
                if self.matrix[i][j] > 0:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        heapq.heappush(heap, (self.vertices[j], j))
        if len(order) != n:
            raise NotAcyclic("quiver has an oriented cycle")
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except NotAcyclic:
            return False
        return True

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "arrows": [[u, v, m] for u, v, m in self.arrows()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Quiver":
        arrows = []
        for a in obj["arrows"]:
            u, v = a[0], a[1]
            m = a[2] if len(a) > 2 else 1
            arrows.append((u, v, m))
        return make_quiver(obj["vertices"], arrows)


def make_quiver(vertices: Iterable[Any], arrows: Iterable[Sequence[Any]]) -> Quiver:
    """Build a quiver from ``(u, v)`` or ``(u, v, multiplicity)`` triples."""
    verts = [str(v) for v in vertices]
    idx = {v: k for k, v in enumerate(verts)}
    n = len(verts)
    count = [[0] * n for _ in range(n)]
    for a in arrows:
        u, v = str(a[0]), str(a[1])
        m = int(a[2]) if len(a) > 2 else 1
        if m < 0:
            raise ValueError("multiplicities must be nonnegative")
        if u not in idx or v not in idx:
            raise KeyError(f"arrow {u}->{v} uses an unknown vertex")
        if u == v and m:
            raise HasLoop(f"loop at {u}")
        count[idx[u]][idx[v]] += m
    for i in range(n):
        for j in range(i + 1, n):
            if count[i][j] and count[j][i]:
                raise HasTwoCycle(f"arrows in both directions between {verts[i]} and {verts[j]}")
    mat = tuple(tuple(count[i][j] - count[j][i] for j in range(n)) for i in range(n))
    return Quiver(tuple(verts), mat)


def mutate(q: Quiver, u: Any) -> Quiver:
    """Matrix mutation: m'_{vw} = -m_{vw} if u in {v, w}, else
    m_{vw} + sgn(m_{vu}) max(m_{vu} m_{uw}, 0)."""
    k = q.index(u)
    m = q.matrix
    n = len(m)
    out = []
    for v in range(n):
        row = []
        for w in range(n):
            if v == k or w == k:
                row.append(-m[v][w])
            else:
                row.append(m[v][w] + _sgn(m[v][k]) * max(m[v][k] * m[k][w], 0))
        out.append(tuple(row))
    return Quiver(q.vertices, tuple(out))


def variable_name(v: str) -> str:
    return f"x{v}"


def _monomial_of(q: Quiver, pairs: Iterable[tuple[str, int]], values: dict[str, Any] | None = None) -> Any:
    out: Any = LaurentPoly(1) if values is None else 1
    for w, m in pairs:
        x = LaurentPoly.var(variable_name(w)) if values is None else values[w]
        out = out * (x ** m)
    return out


def mutation_polynomial(q: Quiver, u: Any) -> LaurentPoly:
    """prod_{v->u} x_v + prod_{u->v} x_v, with multiplicities."""
    return _monomial_of(q, q.incoming(u)) + _monomial_of(q, q.outgoing(u))


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: tuple[LaurentPoly, ...]

    def variable(self, v: Any) -> LaurentPoly:
        return self.cluster[self.quiver.index(v)]

    def as_dict(self) -> dict[str, LaurentPoly]:
        return dict(zip(self.quiver.vertices, self.cluster))


def initial_seed(q: Quiver) -> Seed:
    return Seed(q, tuple(LaurentPoly.var(variable_name(v)) for v in q.vertices))


def mutate_seed(s: Seed, u: Any) -> Seed:
    """Exchange relation y_u x_u = prod_{v->u} x_v + prod_{u->v} x_v."""
    q = s.quiver
    k = q.index(u)
    values = s.as_dict()
    num = _monomial_of(q, q.incoming(u), values) + _monomial_of(q, q.outgoing(u), values)
    try:
        y = rf_normalize_to_laurent(RationalFunction(num, s.cluster[k]))
    except NotLaurent as exc:
        raise LaurentViolation(str(exc)) from None
    cluster = list(s.cluster)
    cluster[k] = y
    return Seed(mutate(q, u), tuple(cluster))


# friezes --------------------------------------------------------------------

@dataclass(frozen=True)
class Frieze:
    """Values a(v, n) for n = start .. start + len - 1 of each row."""

    quiver: Quiver
    rows: dict = field(hash=False)
    start: int = 0

    def value(self, v: Any, n: int) -> Any:
        row = self.rows[str(v)]
        i = n - self.start
        if not 0 <= i < len(row):
            raise IndexError(f"step {n} was not computed")
        return row[i]

    def sequence(self, v: Any, first: int = 0) -> list:
        return list(self.rows[str(v)][first - self.start:])

    @property
    def stop(self) -> int:
        return self.start + len(next(iter(self.rows.values()))) - 1

    def column(self, n: int) -> dict[str, Any]:
        return {v: self.value(v, n) for v in self.quiver.vertices}

    def coefficients_nonnegative(self) -> bool:
        return all(
            x.coefficients_nonnegative() if isinstance(x, LaurentPoly) else x >= 0
            for row in self.rows.values() for x in row
        )

    def to_json(self) -> dict:
        return {"start": self.start,
                "rows": {v: [str(x) for x in self.rows[v]] for v in self.quiver.vertices}}


def _exact_div(num: Any, den: Any, where: str) -> Any:
    if isinstance(num, int):
        qq, r = divmod(num, den)
        if r:
            raise NonIntegralStep(f"{num} is not divisible by {den} at {where}")
        return qq
    try:
        return num / den
    except NotDivisible as exc:
        raise LaurentViolation(f"{where}: {exc}") from None


def _frieze(q: Quiver, steps: int, back: int, initial: dict[str, Any]) -> Frieze:
    if steps < 0 or back < 0:
        raise ValueError("steps must be nonnegative")
    order = q.topological_order()
    ins = {v: q.incoming(v) for v in q.vertices}
    outs = {v: q.outgoing(v) for v in q.vertices}
    cols: dict[int, dict[str, Any]] = {0: dict(initial)}
    for n in range(steps):
        cur, new = cols[n], {}
        for v in order:
            num = 1
            for w, m in ins[v]:
                num = num * new[w] ** m
            for w, m in outs[v]:
                num = num * cur[w] ** m
            new[v] = _exact_div(num + 1, cur[v], f"({v}, {n + 1})")
        cols[n + 1] = new
    for n in range(0, -back, -1):
        cur, new = cols[n], {}
        for v in reversed(order):
            num = 1
            for w, m in outs[v]:
                num = num * new[w] ** m
            for w, m in ins[v]:
                num = num * cur[w] ** m
            new[v] = _exact_div(num + 1, cur[v], f"({v}, {n - 1})")
        cols[n - 1] = new
    rows = {v: [cols[n][v] for n in range(-back, steps + 1)] for v in q.vertices}
    return Frieze(q, rows, -back)


def frieze_numeric(q: Quiver, steps: int, back: int = 0) -> Frieze:
    """Frieze with a(v, 0) = 1, computed for n = -back .. steps.

    a(v, n+1) a(v, n) = 1 + prod_{w->v} a(w, n+1) prod_{v->w} a(w, n), with
    the same relation solved for a(v, n) when stepping backwards.
    """
    f = _frieze(q, steps, back, {v: 1 for v in q.vertices})
    for v, row in f.rows.items():
        if any(x <= 0 for x in row):
            raise NonIntegralStep(f"nonpositive value in row {v}")
    return f


def frieze_symbolic(q: Quiver, steps: int, back: int = 0) -> Frieze:
    """Frieze with a(v, 0) = x_v; every entry is a Laurent polynomial."""
    return _frieze(q, steps, back, {v: LaurentPoly.var(variable_name(v)) for v in q.vertices})


def substitute_ones(f: Frieze) -> Frieze:
    names = [variable_name(v) for v in f.quiver.vertices]
    rows = {v: [x.substitute_ones(names).constant_value() for x in row] for v, row in f.rows.items()}
    return Frieze(f.quiver, rows, f.start)


def frieze_period(f: Frieze) -> int | None:
    """Smallest p > 0 with a(v, n + p) = a(v, n) on every computed cell."""
    length = f.stop - f.start + 1
    for p in range(1, length):
        if all(row[i + p] == row[i] for row in f.rows.values() for i in range(length - p)):
            return p
    return None


# the cycle bridge -----------------------------------------------------------

def cycle_order(q: Quiver) -> list[str]:
    """Vertices of a quiver whose underlying graph is a simple cycle, in order.

    The starting vertex is the first one listed; the direction is chosen so
    that the orientation word has at least as many x as y, breaking a tie
    towards the earlier-listed neighbour.
    """
    n = len(q.vertices)
    nbrs: dict[str, list[str]] = {v: [] for v in q.vertices}
    for u, v, m in q.arrows():
        if m != 1:
            raise NotACycle("multiple arrows are not allowed on a cycle")
        nbrs[u].append(v)
        nbrs[v].append(u)
    if n < 3 or any(len(x) != 2 for x in nbrs.values()):
        raise NotACycle("underlying graph is not a cycle")
    start = q.vertices[0]
    options = []
    for first in sorted(nbrs[start], key=q.index):
        walk = [start, first]
        while len(walk) < n:
            a, b = nbrs[walk[-1]]
            walk.append(b if a == walk[-2] else a)
        if nbrs[walk[-1]].count(start) != 1 or len(set(walk)) != n:
            raise NotACycle("underlying graph is not connected")
        options.append(walk)
    words = [orientation_word(q, w) for w in options]
    return options[1] if words[1].count("x") > words[0].count("x") else options[0]


def orientation_word(q: Quiver, walk: Sequence[str]) -> str:
    n = len(walk)
    return "".join("x" if q.b(walk[j], walk[(j + 1) % n]) > 0 else "y" for j in range(n))


@dataclass(frozen=True)
class BridgeReport:
    word: str
    frontier: Frontier
    walk: tuple[str, ...]
    origins: dict
    frieze: dict
    rays: dict
    agrees: bool
    predicted: Recursion
    predicted_fits: bool
    guessed: dict

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "frontier": str(self.frontier),
            "walk": list(self.walk),
            "origins": {v: list(p) for v, p in self.origins.items()},
            "agrees": self.agrees,
            "predicted_recursion": self.predicted.to_json(),
            "predicted_fits": self.predicted_fits,
            "guessed_recursions": {v: (r.to_json() if r else None) for v, r in self.guessed.items()},
            "rays": {v: [str(x) for x in r] for v, r in self.rays.items()},
        }


def atilde_bridge(q: Quiver, steps: int) -> BridgeReport:
    """Compare the frieze of an acyclic cycle quiver with diagonal rays.

    With w the orientation word (x for j -> j+1, y for j <- j+1), vertex j
    sits at the staircase point P_{j-1} of the frontier ^oo w ^oo, and
    a(j, n) equals the tiling value at P_{j-1} + (n, n).
    """
    walk = cycle_order(q)
    if not q.is_acyclic():
        raise NotAcyclic("the cycle is cyclically oriented")
    w = orientation_word(q, walk)
    f = Frontier(w, "", w)
    t = Tiling(f)
    fr = frieze_numeric(q, steps)
    origins, rays, frieze_rows = {}, {}, {}
    agrees = True
    for j, v in enumerate(walk):
        p = f.point(j)
        origins[v] = p
        rays[v] = [t(p.x + n, p.y + n) for n in range(steps + 1)]
        frieze_rows[v] = fr.sequence(v)
        agrees &= rays[v] == frieze_rows[v]
    a, b = w.count("x"), w.count("y")
    p = a * b // gcd(a, b)
    m = mu(w) ** (p // a + p // b)
    predicted = Recursion((0,) * (p - 1) + (m.trace(),) + (0,) * (p - 1) + (-1,))
    predicted_fits = all(predicted.fits(r) for r in rays.values())
    guessed = {}
    for v, r in rays.items():
        max_order = min(2 * p, (len(r) - 2) // 2)
        guessed[v] = guess_recursion(r, max_order) if max_order >= 1 else None
    return BridgeReport(w, f, tuple(walk), origins, frieze_rows, rays, agrees,
                        predicted, predicted_fits, guessed)
