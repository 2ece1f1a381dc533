"""Extending partial tilings: staircase bands, fringes and continuant tilings."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from ..errors import BandInvalid
from ..words import continuant

Cell = tuple[int, int]


def _seq(s: Sequence[Any] | Callable[[int], Any], start: int) -> Callable[[int], Any]:
    if callable(s):
        return s
    values = list(s)

    def get(n: int) -> Any:
        i = n - start
        if not 0 <= i < len(values):
            raise IndexError(f"band row {n} outside the supplied data")
        return values[i]

    return get


@dataclass(frozen=True)
class Band:
    """k >= 4 two-sided sequences laid out in staircase.

    Row n holds ``sequences[j](n)`` at column ``n + column_offset + j``. Each
    sequence is a callable on integers or a list whose element 0 is row
    ``start``. ``rows`` bounds the rows that validation inspects; for lists
    it defaults to the rows actually supplied.
    """

    sequences: tuple
    column_offset: int = 0
    start: int = 0
    rows: tuple[int, int] | None = None
    _get: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seqs = tuple(self.sequences)
        if len(seqs) < 4:
            raise BandInvalid("a band needs at least four sequences")
        object.__setattr__(self, "sequences", seqs)
        object.__setattr__(self, "_get", tuple(_seq(s, self.start) for s in seqs))
        if self.rows is None and not any(callable(s) for s in seqs):
            n = min(len(s) for s in seqs)
            object.__setattr__(self, "rows", (self.start, self.start + n - 1))

    @property
    def width(self) -> int:
        return len(self.sequences)

    def cell(self, x: int, y: int) -> Any:
        j = x - y - self.column_offset
        if not 0 <= j < self.width:
            raise KeyError((x, y))
        return self._get[j](y)

    def contains(self, x: int, y: int) -> bool:
        return 0 <= x - y - self.column_offset < self.width

    def validate(self, rows: tuple[int, int] | None = None) -> None:
        """Check every adjacent 2x2 minor inside the band on the given rows."""
        lo, hi = rows or self.rows or (0, -1)
        g = self._get
        for n in range(lo, hi):
            for j in range(1, self.width - 1):
                m = g[j](n) * g[j](n + 1) - g[j + 1](n) * g[j - 1](n + 1)
                if m != 1:
                    raise BandInvalid(f"minor at row {n}, band column {j} is {m}, not 1")


class BandTiling:
    """The unique tame tiling extending a band.

    Column x satisfies C_{x-1} + C_{x+1} = alpha_x C_x, with alpha_x read off
    as a 2x2 determinant inside the band. Values are computed lazily and
    memoized.
    """

    def __init__(self, band: Band, check_rows: tuple[int, int] | None = None):
        self.band = band
        band.validate(check_rows)
        self._alpha: dict[int, Any] = {}
        self._rows: dict[int, dict[int, Any]] = {}

    def _row_ok(self, r: int) -> bool:
        rows = self.band.rows
        return rows is None or rows[0] <= r <= rows[1]

    def alpha(self, x: int) -> Any:
        if x in self._alpha:
            return self._alpha[x]
        o, k, cell = self.band.column_offset, self.band.width, self.band.cell
        candidates = [r for r in range(x + 2 - o - k, x - o - 1) if self._row_ok(r) and self._row_ok(r + 1)]
        if not candidates:
            raise IndexError(f"no band rows available to determine column {x}")
        vals = {cell(x - 1, r) * cell(x + 1, r + 1) - cell(x + 1, r) * cell(x - 1, r + 1) for r in candidates}
        if len(vals) != 1:
            raise BandInvalid(f"band is not tame: column {x} has coefficients {sorted(vals, key=str)}")
        a = vals.pop()
        self._alpha[x] = a
        return a

    def __call__(self, x: int, y: int) -> Any:
        b = self.band
        if b.contains(x, y):
            return b.cell(x, y)
        row = self._rows.setdefault(y, {})
        if x in row:
            return row[x]
        lo = y + b.column_offset
        hi = lo + b.width - 1
        if x > hi:
            c = max([hi] + [c for c in row if c > hi and c < x])
            prev, cur = self(c - 1, y), self(c, y)
            while c < x:
                prev, cur = cur, self.alpha(c) * cur - prev
                c += 1
                row[c] = cur
        else:
            c = min([lo] + [c for c in row if x < c < lo])
            nxt, cur = self(c + 1, y), self(c, y)
            while c > x:
                nxt, cur = cur, self.alpha(c) * cur - nxt
                c -= 1
                row[c] = cur
        return row[x]

    def window(self, x0: int, y0: int, width: int, height: int) -> list[list[Any]]:
        return [[self(x0 + i, y0 + j) for i in range(width)] for j in range(height)]


def extend_from_band(b: Band, check_rows: tuple[int, int] | None = None) -> BandTiling:
    return BandTiling(b, check_rows)


def _norm(v: Any) -> Any:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def extend_partial(known: dict[Cell, Any], window: tuple[int, int, int, int]) -> dict[Cell, Any]:
    """Propagate a partial tame tiling over a rectangle.

    Repeatedly applies the adjacent-minor rule (three entries of a 2x2 block
    fix the fourth when the divisor is nonzero) and the column and row
    linearization rules, until nothing changes. Returns all cells that were
    determined inside ``window`` = (x0, y0, width, height). Fringe-shaped
    inputs determine every cell this way.
    """
    x0, y0, w, h = window
    xs = [c[0] for c in known] + [x0, x0 + w - 1]
    ys = [c[1] for c in known] + [y0, y0 + h - 1]
    bx0, bx1, by0, by1 = min(xs), max(xs), min(ys), max(ys)
    t: dict[Cell, Any] = {k: Fraction(v) if isinstance(v, int) else v for k, v in known.items()}

    def inside(x: int, y: int) -> bool:
        return bx0 <= x <= bx1 and by0 <= y <= by1

    def put(x: int, y: int, v: Any) -> bool:
        if not inside(x, y):
            return False
        old = t.get((x, y))
        if old is None:
            t[(x, y)] = v
            return True
        if old != v:
            raise BandInvalid(f"inconsistent value at {(x, y)}: {old} vs {v}")
        return False

    changed = True
    while changed:
        changed = False
        for x in range(bx0, bx1):
            for y in range(by0, by1):
                a, b_, c, d = t.get((x, y)), t.get((x + 1, y)), t.get((x, y + 1)), t.get((x + 1, y + 1))
                missing = [v is None for v in (a, b_, c, d)]
                if sum(missing) != 1:
                    continue
                if a is None and d != 0:
                    changed |= put(x, y, (1 + b_ * c) / d)
                elif d is None and a != 0:
                    changed |= put(x + 1, y + 1, (1 + b_ * c) / a)
                elif b_ is None and c != 0:
                    changed |= put(x + 1, y, (a * d - 1) / c)
                elif c is None and b_ != 0:
                    changed |= put(x, y + 1, (a * d - 1) / b_)
        # linearization along columns and rows
        for axis in (0, 1):
            lo, hi = (bx0, bx1) if axis == 0 else (by0, by1)
            olo, ohi = (by0, by1) if axis == 0 else (bx0, bx1)

            def g(i: int, j: int) -> Any:
                return t.get((i, j) if axis == 0 else (j, i))

            def s(i: int, j: int, v: Any) -> bool:
                return put(i, j, v) if axis == 0 else put(j, i, v)

            for i in range(lo + 1, hi):
                coef = None
                for j in range(olo, ohi):
                    vals = (g(i - 1, j), g(i + 1, j), g(i - 1, j + 1), g(i + 1, j + 1))
                    if None not in vals:
                        p, q, r, u = vals
                        coef = p * u - q * r if axis == 0 else p * u - r * q
                        break
                if coef is None:
                    continue
                for j in range(olo, ohi + 1):
                    l, m, r = g(i - 1, j), g(i, j), g(i + 1, j)
                    if m is None and l is not None and r is not None and coef != 0:
                        changed |= s(i, j, (l + r) / coef)
                    elif m is not None and l is None and r is not None:
                        changed |= s(i - 1, j, coef * m - r)
                    elif m is not None and r is None and l is not None:
                        changed |= s(i + 1, j, coef * m - l)
    return {
        (x, y): _norm(t[(x, y)])
        for x in range(x0, x0 + w)
        for y in range(y0, y0 + h)
        if (x, y) in t
    }


def continuant_tiling(a: Callable[[int], Any] | Sequence[Any],
                      window: tuple[int, int, int, int], start: int = 0) -> list[list[Any]]:
    """Window of the tame tiling with 0 on the main diagonal, 1 just below,
    -1 just above, and ``a_r`` at (r-2, r).

    Below the zero diagonal t(c, r) = q(a_{c+2}, ..., a_r); above it
    t(c, r) = -q(a_{r+2}, ..., a_c). Coordinates are (column, row).
    """
    get = a if callable(a) else _seq(a, start)
    x0, y0, w, h = window
    rows = []
    for r in range(y0, y0 + h):
        row = []
        for c in range(x0, x0 + w):
            if r >= c:
                row.append(continuant([get(i) for i in range(c + 2, r + 1)]) if r > c else 0)
            else:
                row.append(-continuant([get(i) for i in range(r + 2, c + 1)]))
        rows.append(row)
    return rows
