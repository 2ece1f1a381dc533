"""Ultimately periodic frontiers and the SL2-tilings they define.

Coordinates: ``x`` grows to the right and ``y`` grows downward. The
frontier is the bi-infinite word ``...LLL core RRR...``; its staircase
points are indexed by integers, with P_0 = (0, 0) sitting between the core
and the first copy of the right period. Letter ``i`` joins P_i to
P_{i+1}; an ``x`` moves one step right, a ``y`` one step up.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, NamedTuple

from ..errors import BadDirection, NotAdmissible
from ..exact_algebra import LaurentPoly, Mat2
from ..words import check_word, mu, swap_letters


class Point(NamedTuple):
    x: int
    y: int


class Region(enum.Enum):
    BELOW = "Below"
    ON = "On"
    ABOVE = "Above"


def _prefixes(w: str) -> list[tuple[int, int]]:
    out = [(0, 0)]
    x = y = 0
    for ch in w:
        if ch == "x":
            x += 1
        else:
            y -= 1
        out.append((x, y))
    return out


@dataclass(frozen=True)
class Frontier:
    left: str
    core: str
    right: str
    variables: tuple[tuple[int, str], ...] = ()
    _pl: list = field(init=False, repr=False, compare=False, hash=False)
    _pc: list = field(init=False, repr=False, compare=False, hash=False)
    _pr: list = field(init=False, repr=False, compare=False, hash=False)
    _vars: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        for w in (self.left, self.core, self.right):
            check_word(w)
        for name, w in (("left", self.left), ("right", self.right)):
            if "x" not in w or "y" not in w:
                raise NotAdmissible(f"{name} period {w!r} must contain both x and y")
        variables = self.variables
        if isinstance(variables, Mapping):
            variables = tuple(sorted((int(k), str(v)) for k, v in variables.items()))
        else:
            variables = tuple(sorted((int(k), str(v)) for k, v in variables))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_vars", dict(variables))
        object.__setattr__(self, "_pl", _prefixes(self.left))
        object.__setattr__(self, "_pc", _prefixes(self.core))
        object.__setattr__(self, "_pr", _prefixes(self.right))

    @classmethod
    def parse(cls, text: str) -> "Frontier":
        parts = text.strip().split("|")
        if len(parts) != 3:
            raise NotAdmissible(f"frontier text must be LEFT|CORE|RIGHT, got {text!r}")
        return cls(*parts)

    def __str__(self) -> str:
        return f"{self.left}|{self.core}|{self.right}"

    @property
    def has_variables(self) -> bool:
        return bool(self.variables)

    def variable_at(self, i: int) -> LaurentPoly | int:
        name = self._vars.get(i)
        return 1 if name is None else LaurentPoly.var(name)

    # staircase geometry ---------------------------------------------------
    def letter(self, i: int) -> str:
        nc = len(self.core)
        if i >= 0:
            return self.right[i % len(self.right)]
        if i >= -nc:
            return self.core[i + nc]
        return self.left[(i + nc) % len(self.left)]

    def word(self, start: int, end: int) -> str:
        """Letters start .. end-1."""
        return "".join(self.letter(i) for i in range(start, end))

    def point(self, i: int) -> Point:
        nc = len(self.core)
        if i >= 0:
            k, r = divmod(i, len(self.right))
            dx, dy = self._pr[-1]
            px, py = self._pr[r]
            return Point(k * dx + px, k * dy + py)
        cx, cy = self._pc[-1]
        if i >= -nc:
            px, py = self._pc[i + nc]
            return Point(px - cx, py - cy)
        nl = len(self.left)
        k, r = divmod(-nc - i, nl)
        lx, ly = self._pl[-1]
        sx, sy = self._pl[nl - r]
        return Point(-cx - k * lx - (lx - sx), -cy - k * ly - (ly - sy))

    def _first(self, pred: Callable[[int], bool]) -> int:
        """Smallest i with pred(i), for pred monotone from False to True."""
        lo, hi, step = -1, 0, 1
        while not pred(hi):
            lo, hi, step = hi, hi + step, step * 2
        step = 1
        while pred(lo):
            hi, lo, step = lo, lo - step, step * 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pred(mid):
                hi = mid
            else:
                lo = mid
        return hi

    def column_range(self, u: int) -> tuple[int, int]:
        """Indices (lowest, highest) of staircase points in column u."""
        low = self._first(lambda i: self.point(i).x >= u)
        high = self._first(lambda i: self.point(i).x >= u + 1) - 1
        return low, high

    def row_range(self, v: int) -> tuple[int, int]:
        """Indices (leftmost, rightmost) of staircase points in row v."""
        left = self._first(lambda i: self.point(i).y <= v)
        right = self._first(lambda i: self.point(i).y < v) - 1
        return left, right

    def locate(self, p: tuple[int, int]) -> tuple[Region, int, int]:
        """Region of p and the index range [start, end] of its word.

        The word of p consists of letters start .. end-1. For points on the
        staircase, start == end is the index of the point itself.
        """
        u, v = p
        low, high = self.column_range(u)
        if v > self.point(low).y:
            return Region.BELOW, self.row_range(v)[1], low
        if v < self.point(high).y:
            return Region.ABOVE, high, self.row_range(v)[0]
        i = low + (self.point(low).y - v)
        return Region.ON, i, i

    def staircase_index(self, p: tuple[int, int]) -> int | None:
        region, i, _ = self.locate(p)
        return i if region is Region.ON else None


def make_frontier(left: str, core: str, right: str,
                  variables: Mapping[int, str] | None = None) -> Frontier:
    return Frontier(left, core, right, tuple((variables or {}).items()))


def word_of_point(f: Frontier, p: tuple[int, int]) -> tuple[str, Region]:
    region, start, end = f.locate(p)
    return f.word(start, end), region


def evaluate(f: Frontier, p: tuple[int, int]) -> int:
    """Value of the all-ones tiling at p.

    Below the frontier this is mu(w)[2,2] for the word w of p. Above it the
    same formula is applied to w with x and y exchanged, which is the value
    at the mirror point of the transposed frontier.
    """
    region, start, end = f.locate(p)
    if region is Region.ON:
        return 1
    w = f.word(start, end)
    if region is Region.ABOVE:
        w = swap_letters(w)
    return mu(w).d


def _mu_var(a: Any, letter: str, b: Any) -> Mat2:
    if letter == "x":
        return Mat2(a, 1, 0, b)
    return Mat2(b, 0, 1, a)


def general_word_value(letters: str, values: list[Any]) -> Any:
    """Tiling value for a word x_1..x_{n+1} decorated by a_0..a_{n+1}.

    Computes (1, a_0) mu(a_1,x_2,a_2) ... mu(a_{n-1},x_n,a_n) (1, a_{n+1})^T
    divided by a_1 ... a_n. Needs n >= 1, i.e. at least two letters.
    """
    n = len(letters) - 1
    if n < 1:
        raise ValueError("a word of a point off the frontier has at least two letters")
    if len(values) != n + 2:
        raise ValueError("need one value per staircase point of the word")
    m = Mat2.identity()
    for k in range(2, n + 1):
        m = m @ _mu_var(values[k - 1], letters[k - 1], values[k])
    first, last = values[0], values[n + 1]
    num = (m.a + first * m.c) + (m.b + first * m.d) * last
    den: Any = 1
    for a in values[1:n + 1]:
        den = den * a
    if isinstance(den, int) and den == 1:
        return num
    if not isinstance(num, LaurentPoly):
        num = LaurentPoly(num)
    if not isinstance(den, LaurentPoly):
        den = LaurentPoly(den)
    return num / den


def evaluate_general(f: Frontier, p: tuple[int, int]) -> LaurentPoly:
    """Value at p as a Laurent polynomial in the frontier variables."""
    region, start, end = f.locate(p)
    if region is Region.ON:
        v = f.variable_at(start)
        return v if isinstance(v, LaurentPoly) else LaurentPoly(v)
    letters = f.word(start, end)
    if region is Region.ABOVE:
        letters = swap_letters(letters)
    values = [f.variable_at(i) for i in range(start, end + 1)]
    out = general_word_value(letters, values)
    return out if isinstance(out, LaurentPoly) else LaurentPoly(out)


class Tiling:
    """Memoizing evaluator for the tiling of a frontier.

    With ``symbolic=True`` (or when the frontier carries variables) values
    are Laurent polynomials. The memo is a plain dict: use one instance per
    thread, or share it read-mostly.
    """

    def __init__(self, frontier: Frontier, symbolic: bool | None = None, offset: tuple[int, int] = (0, 0)):
        self.frontier = frontier
        self.symbolic = frontier.has_variables if symbolic is None else symbolic
        self.offset = Point(*offset)
        self._memo: dict[tuple[int, int], Any] = {}

    def __call__(self, x: int, y: int) -> Any:
        key = (x, y)
        val = self._memo.get(key)
        if val is None:
            p = (x - self.offset.x, y - self.offset.y)
            val = evaluate_general(self.frontier, p) if self.symbolic else evaluate(self.frontier, p)
            self._memo[key] = val
        return val

    def value(self, p: tuple[int, int]) -> Any:
        return self(p[0], p[1])

    def window(self, x0: int, y0: int, width: int, height: int) -> list[list[Any]]:
        return [[self(x0 + i, y0 + j) for i in range(width)] for j in range(height)]


def ray(f: Frontier | Tiling, origin: tuple[int, int], direction: tuple[int, int], count: int) -> list[Any]:
    if tuple(direction) == (0, 0):
        raise BadDirection("ray direction must be nonzero")
    t = f if isinstance(f, Tiling) else Tiling(f)
    (x, y), (dx, dy) = origin, direction
    return [t(x + n * dx, y + n * dy) for n in range(count)]


def linearization_coefficient(f: Frontier, column_x: int) -> int:
    """k + 1, where k is the number of staircase points in the column."""
    low, high = f.column_range(column_x)
    return high - low + 2


def linearization_by_determinant(t: Tiling | Callable[[int, int], Any], column_x: int, row: int) -> Any:
    """The coefficient alpha with C_{x-1} + C_{x+1} = alpha C_x, read off two rows."""
    return (t(column_x - 1, row) * t(column_x + 1, row + 1)
            - t(column_x + 1, row) * t(column_x - 1, row + 1))


def semi_adjacent_minor(f: Frontier | Tiling, col1: int, col2: int, row: int) -> Any:
    if col1 >= col2:
        raise ValueError("need col1 < col2")
    t = f if isinstance(f, Tiling) else Tiling(f)
    return t(col1, row) * t(col2, row + 1) - t(col2, row) * t(col1, row + 1)


def frontier_points(f: Frontier, start: int, end: int) -> Iterable[tuple[int, Point]]:
    for i in range(start, end + 1):
        yield i, f.point(i)
