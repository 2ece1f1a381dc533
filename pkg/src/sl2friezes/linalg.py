"""Small exact linear-algebra kernel over the rationals.

Matrices are lists of rows. Entries may be ints or Fractions; results that
need division come back as Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                m[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    return len(rref(a)[1]) if a else 0


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One exact solution of a x = b (free variables set to 0), or None."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    return x


def nullspace(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """A basis of {x : a x = 0}."""
    n = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v: Sequence, a: Sequence[Sequence]) -> list:
    """Row vector times matrix, skipping zero entries of v."""
    n = len(a[0]) if a else 0
    out = [0] * n
    for vi, row in zip(v, a):
        if vi:
            for j, x in enumerate(row):
                if x:
                    out[j] += vi * x
    return out


def kron(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def charpoly(a: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(tI - a) = t^n + c1 t^(n-1) + ... + cn.

    Reduces to upper Hessenberg form by exact similarity transforms, then
    expands the Hessenberg determinant by the usual three-term recurrence.
    """
    n = len(a)
    h = [[Fraction(x) for x in row] for row in a]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for i in range(j + 2, n):
            if h[i][j] != 0:
                f = h[i][j] / h[j + 1][j]
                h[i] = [x - f * y for x, y in zip(h[i], h[j + 1])]
                for row in h:
                    row[j + 1] += f * row[i]
    # p[k] is the char poly of the leading k x k block, as coefficient lists
    # in increasing degree.
    p: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        hk = h[k - 1][k - 1]
        prev = p[k - 1]
        cur = [Fraction(0)] + prev  # t * p_{k-1}
        for i, c in enumerate(prev):
            cur[i] -= hk * c
        prod = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod *= h[i][i - 1]
            if prod == 0:
                break
            coeff = h[i - 1][k - 1] * prod
            if coeff:
                for d, c in enumerate(p[i - 1]):
                    cur[d] -= coeff * c
        p.append(cur)
    return list(reversed(p[n]))
