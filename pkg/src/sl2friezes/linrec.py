"""Linear representations a_n = lam M^n gamma and linear recursions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Hashable, Iterable, Iterator, Sequence

from . import linalg
from .errors import BadDirection, InsufficientTerms
from .tiling.frontier import Frontier, Point, Region, evaluate
from .words import mu


def _exact(x: Any) -> int | Fraction:
    if isinstance(x, bool):
        raise TypeError("bool is not a number")
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class LinearRep:
    """Row vector ``lam``, square matrix ``mat`` and column vector ``gamma``."""

    lam: tuple
    mat: tuple
    gamma: tuple

    def __post_init__(self) -> None:
        lam = tuple(_exact(x) for x in self.lam)
        mat = tuple(tuple(_exact(x) for x in row) for row in self.mat)
        gamma = tuple(_exact(x) for x in self.gamma)
        d = len(lam)
        if d < 1 or len(gamma) != d or len(mat) != d or any(len(r) != d for r in mat):
            raise ValueError("inconsistent dimensions in linear representation")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "gamma", gamma)

    @property
    def dim(self) -> int:
        return len(self.lam)

    @property
    def nonnegative_integral(self) -> bool:
        """True when every entry is a nonnegative integer."""
        entries = list(self.lam) + list(self.gamma) + [x for r in self.mat for x in r]
        return all(isinstance(x, int) and x >= 0 for x in entries)

    def iter_terms(self) -> Iterator[int | Fraction]:
        v = list(self.lam)
        while True:
            yield _exact(sum(a * b for a, b in zip(v, self.gamma) if a))
            v = linalg.vecmat(v, self.mat)

    def terms(self, count: int) -> list[int | Fraction]:
        it = self.iter_terms()
        return [next(it) for _ in range(count)]

    def term(self, n: int) -> int | Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        return self.terms(n + 1)[-1]

    def to_json(self) -> dict:
        s = str
        return {"lambda": [s(x) for x in self.lam],
                "matrix": [[s(x) for x in r] for r in self.mat],
                "gamma": [s(x) for x in self.gamma]}

    @classmethod
    def from_json(cls, obj: dict) -> "LinearRep":
        return cls(tuple(Fraction(x) for x in obj["lambda"]),
                   tuple(tuple(Fraction(x) for x in r) for r in obj["matrix"]),
                   tuple(Fraction(x) for x in obj["gamma"]))


def lr_term(r: LinearRep, n: int) -> int | Fraction:
    return r.term(n)


@dataclass(frozen=True)
class Recursion:
    """a_{n+d} = c_1 a_{n+d-1} + ... + c_d a_n."""

    coefficients: tuple
    initial: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(_exact(c) for c in self.coefficients))
        object.__setattr__(self, "initial", tuple(_exact(c) for c in self.initial))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def fits(self, terms: Sequence[Any]) -> bool:
        d = self.order
        c = self.coefficients
        return all(
            terms[n + d] == sum(c[k] * terms[n + d - 1 - k] for k in range(d))
            for n in range(len(terms) - d)
        )

    def extend(self, count: int) -> list:
        out = list(self.initial)
        d = self.order
        while len(out) < count:
            out.append(_exact(sum(self.coefficients[k] * out[-1 - k] for k in range(d))))
        return out[:count]

    def polynomial(self) -> list:
        """Coefficients of t^d - c_1 t^(d-1) - ... - c_d, highest degree first."""
        return [1] + [-c for c in self.coefficients]

    def to_json(self) -> dict:
        return {"order": self.order,
                "coefficients": [str(c) for c in self.coefficients],
                "initial": [str(c) for c in self.initial]}


def guess_recursion(terms: Sequence[Any], max_order: int) -> Recursion | None:
    """Minimal-order recursion with constant coefficients fitting all terms."""
    a = [_exact(t) for t in terms]
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if len(a) < 2 * max_order + 2:
        raise InsufficientTerms(f"need at least {2 * max_order + 2} terms, got {len(a)}")
    for d in range(1, max_order + 1):
        rows = [[a[n + d - 1 - k] for k in range(d)] for n in range(len(a) - d)]
        rhs = [a[n + d] for n in range(len(a) - d)]
        sol = linalg.solve(rows, rhs)
        if sol is None:
            continue
        rec = Recursion(tuple(sol), tuple(a[:d]))
        if rec.fits(a):
            return rec
    return None


def lr_merge(reps: Sequence[LinearRep]) -> LinearRep:
    """Interlace p sequences: the result has term(i + n p) = reps[i].term(n).

    Component i is carried by p blocks of its own dimension arranged in a
    cycle: identity from block r to r+1 and M_i from block p-1 back to 0.
    """
    p = len(reps)
    if p < 1:
        raise ValueError("need at least one representation")
    if p == 1:
        return reps[0]
    total = sum(r.dim for r in reps) * p
    lam = [0] * total
    gamma = [0] * total
    mat = [[0] * total for _ in range(total)]
    base = 0
    for i, r in enumerate(reps):
        d = r.dim

        def blk(k: int) -> int:
            return base + k * d

        for j in range(d):
            lam[blk(0) + j] = r.lam[j]
            gamma[blk(i) + j] = r.gamma[j]
        for k in range(p - 1):
            for j in range(d):
                mat[blk(k) + j][blk(k + 1) + j] = 1
        for j in range(d):
            for jj in range(d):
                mat[blk(p - 1) + j][blk(0) + jj] = r.mat[j][jj]
        base += d * p
    return LinearRep(tuple(lam), tuple(map(tuple, mat)), tuple(gamma))


def lr_hadamard(r1: LinearRep, r2: LinearRep) -> LinearRep:
    """Termwise product via Kronecker products."""
    lam = tuple(x * y for x in r1.lam for y in r2.lam)
    gamma = tuple(x * y for x in r1.gamma for y in r2.gamma)
    return LinearRep(lam, tuple(map(tuple, linalg.kron(r1.mat, r2.mat))), gamma)


def lr_char_recursion(r: LinearRep) -> Recursion:
    """Recursion given by the characteristic polynomial of M (Cayley-Hamilton)."""
    cp = linalg.charpoly(r.mat)
    coeffs = tuple(-c for c in cp[1:])
    return Recursion(coeffs, tuple(r.terms(r.dim)))


def constant_rep(c: Any) -> LinearRep:
    return LinearRep((1,), ((1,),), (c,))


def matrix_power_rep(m: Any, i: int = 2, j: int = 2) -> LinearRep:
    """n -> (M^n)_{ij} for a 2x2 matrix M (1-based indices)."""
    lam = (1, 0) if i == 1 else (0, 1)
    gamma = (1, 0) if j == 1 else (0, 1)
    return LinearRep(lam, tuple(map(tuple, m.rows())), gamma)


def digraph_path_counter(edges: Iterable[tuple[Hashable, Hashable]], v0: Hashable,
                         finals: Iterable[Hashable],
                         vertices: Sequence[Hashable] | None = None) -> LinearRep:
    """term(n) counts paths of length n from v0 ending in ``finals``.

    Repeated edges count with multiplicity.
    """
    edges = list(edges)
    if vertices is None:
        seen: dict = {}
        for v in [v0, *finals] + [x for e in edges for x in e]:
            seen.setdefault(v, None)
        vertices = list(seen)
    idx = {v: k for k, v in enumerate(vertices)}
    d = len(vertices)
    mat = [[0] * d for _ in range(d)]
    for u, v in edges:
        mat[idx[u]][idx[v]] += 1
    finals = set(finals)
    lam = tuple(1 if v == v0 else 0 for v in vertices)
    gamma = tuple(1 if v in finals else 0 for v in vertices)
    return LinearRep(lam, tuple(map(tuple, mat)), gamma)


# rays -----------------------------------------------------------------------

@dataclass(frozen=True)
class RayRepresentation:
    """A representation of the ray origin + n dir, valid from ``offset`` on.

    ``rep.term(m)`` is the tiling value at origin + (offset + m) dir.
    """

    rep: LinearRep
    period: int
    offset: int
    origin: tuple[int, int]
    direction: tuple[int, int]
    classes: tuple = field(default=(), compare=False)

    def value(self, n: int) -> int | Fraction:
        if n < self.offset:
            raise ValueError(f"representation is valid from index {self.offset}")
        return self.rep.term(n - self.offset)

    def terms(self, count: int) -> list:
        return self.rep.terms(count)

    def to_json(self, count: int = 0) -> dict:
        out = {"period": self.period, "offset": self.offset,
               "origin": list(self.origin), "dir": list(self.direction),
               "dimension": self.rep.dim,
               "nonnegative_integral": self.rep.nonnegative_integral,
               "classes": [dict(zip(("left", "middle", "right"), c)) for c in self.classes]}
        out.update(self.rep.to_json())
        if count:
            out["terms"] = [str(t) for t in self.rep.terms(count)]
        return out


def ray_representation(f: Frontier, origin: tuple[int, int], direction: tuple[int, int]) -> RayRepresentation:
    """Linear representation of the ray with nonnegative integer entries.

    After an offset, the word of the point with index i + n q has the form
    u'^n v u^n, where u' and u are fixed blocks of the left and right
    periods. Each residue class is then e2 mu(u')^n mu(v) mu(u)^n e2^T, a
    Hadamard product of two matrix-power sequences, and the classes are
    merged.
    """
    a, b = direction
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise BadDirection("direction must be componentwise nonnegative and nonzero")
    if f.has_variables:
        raise ValueError("ray representations need an all-ones frontier")
    left, right, nc = f.left, f.right, len(f.core)
    y_left, x_right = left.count("y"), right.count("x")
    qb = y_left // gcd(y_left, b) if b else 1
    qa = x_right // gcd(x_right, a) if a else 1
    q = qa * qb // gcd(qa, qb)
    left_shift = (q * b // y_left) * len(left)
    right_shift = (q * a // x_right) * len(right)
    ox, oy = origin

    def locate(m: int) -> tuple[Region, int, int]:
        return f.locate((ox + m * a, oy + m * b))

    def stable(m: int) -> bool:
        region, start, end = locate(m)
        if region is not Region.BELOW:
            return False
        if b and start >= -nc:
            return False
        if a and end < 1:
            return False
        return True

    n0 = 0
    while not all(stable(i + n0 * q) for i in range(q)):
        n0 += 1
        if n0 > 10_000:
            raise RuntimeError("ray never stabilizes below the frontier")
    reps = []
    classes = []
    for i in range(q):
        m = i + n0 * q
        _, start, end = locate(m)
        mid = f.word(start, end)
        lw = f.word(start - left_shift, start)
        rw = f.word(end, end + right_shift)
        _, s2, e2 = locate(m + q)
        if f.word(s2, e2) != lw + mid + rw:
            raise AssertionError("ray words do not follow the periodic pattern")
        lm, mm, rm = mu(lw), mu(mid), mu(rw)
        # e2 L^n N R^n e2^T = sum_{j,k} (L^n)_{2j} N_{jk} (R^n)_{k2}
        #                   = (e2 (x) e2) (L (x) R^T)^n vec(N)
        left_rep = LinearRep((0, 1), tuple(map(tuple, lm.rows())), (1, 0))
        right_rep = LinearRep((0, 1), tuple(map(tuple, rm.transpose().rows())), (1, 0))
        had = lr_hadamard(left_rep, right_rep)
        reps.append(LinearRep(had.lam, had.mat, (mm.a, mm.b, mm.c, mm.d)))
        classes.append((lw, mid, rw))
    rep = lr_merge(reps)
    return RayRepresentation(rep, q, n0 * q, tuple(origin), tuple(direction), tuple(classes))


def check_ray_representation(f: Frontier, rr: RayRepresentation, count: int) -> bool:
    (ox, oy), (a, b) = rr.origin, rr.direction
    got = rr.terms(count)
    want = [evaluate(f, Point(ox + (rr.offset + n) * a, oy + (rr.offset + n) * b)) for n in range(count)]
    return got == want
