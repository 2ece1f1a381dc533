"""Quadratic forms attached to tiling corners, and Pythagorean triples."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, isqrt

from ..errors import MalformedWord, NotRealizable
from ..exact_algebra import Mat2
from ..words import check_word, factor_sl2, mu, transpose_word
from .frontier import Frontier, Point, evaluate


def bilinear(m: Mat2, v1: tuple[int, int], v2: tuple[int, int]) -> int:
    """v1 m v2^T."""
    return (v1[0] * m.a + v1[1] * m.c) * v2[0] + (v1[0] * m.b + v1[1] * m.d) * v2[1]


@dataclass(frozen=True)
class QuadReport:
    w: str
    u: str
    l: int
    form: tuple[int, int, int]          # Q(x, y) = a x^2 + e x y + d y^2
    q: int
    s: int
    q2: int
    s2: int
    tA: int
    tB: int
    tC: int
    tD: int
    points: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "w": self.w, "u": self.u, "l": self.l,
            "form": list(self.form),
            "q": self.q, "s": self.s, "q2": self.q2, "s2": self.s2,
            "tA": self.tA, "tB": self.tB, "tC": self.tC, "tD": self.tD,
            "points": {k: list(v) for k, v in self.points.items()},
            "checks": dict(self.checks),
        }


_SQUARE = re.compile(r"yx*y")


def quad_corner_report(w: str, u: str, l: int) -> QuadReport:
    """Corner values A, B, C, D for the frontier  ^t(v) w v  with v = u y^l x.

    The values come from the quadratic form of mu(w) evaluated on the last
    columns of mu(u) and mu(v); they are cross-checked against a direct
    evaluation of the tiling of that frontier.
    """
    check_word(w)
    check_word(u)
    if not w or not u:
        raise MalformedWord("w and u must be nonempty")
    if u[0] != "y" or u[-1] != "x":
        raise MalformedWord(f"u must start with y and end with x: {u!r}")
    if l < 0:
        raise ValueError("l must be nonnegative")
    v = u + "y" * l + "x"
    mw, mu_u, mu_v = mu(w), mu(u), mu(v)
    q, s = mu_u.b, mu_u.d
    q2, s2 = mu_v.b, mu_v.d
    tA = bilinear(mw, (q, s), (q, s))
    tB = bilinear(mw, (q, s), (q2, s2))
    tC = bilinear(mw, (q2, s2), (q, s))
    tD = bilinear(mw, (q2, s2), (q2, s2))

    f = Frontier("xy", transpose_word(v) + w + v, "xy")
    h_idx = -len(f.core) + len(v)
    H = f.point(h_idx)
    P = f.point(h_idx + len(w))
    k = u.count("x")
    M = Point(P.x + k, P.y)
    A = Point(M.x, H.y + k)
    B, C, D = Point(A.x + 1, A.y), Point(A.x, A.y + 1), Point(A.x + 1, A.y + 1)
    points = {"H": H, "P": P, "Q": Point(P.x, H.y), "M": M, "N": Point(M.x + 1, M.y),
              "A": A, "B": B, "C": C, "D": D}
    checks = {
        "unimodular": tA * tD - tB * tC == 1,
        "b_minus_c": mw.b - mw.c == tC - tB,
        "s_is_tM": evaluate(f, M) == s,
        "tiling": [evaluate(f, p) for p in (A, B, C, D)] == [tA, tB, tC, tD],
    }
    if _SQUARE.fullmatch(w):
        h = len(w) - 2
        tM1 = q + s
        tN1 = mu_u.a + mu_u.c + (q + s) * (l + 1)
        checks["square_tA"] = tA == (h + 1) * tM1 * tM1
        checks["square_tB_minus_tC"] = tB - tC == 2
        checks["square_tB"] = tB == (h + 1) * tM1 * tN1 + 1
        checks["square_tM1"] = evaluate(f, Point(M.x, M.y + 1)) == tM1
        checks["square_tN1"] = evaluate(f, Point(M.x + 1, M.y + 1)) == tN1
        if h == 0:
            checks["pythagorean"] = (tA + tD) ** 2 == (tD - tA) ** 2 + (tB + tC) ** 2
    return QuadReport(w, u, l, (mw.a, mw.b + mw.c, mw.d), q, s, q2, s2,
                      tA, tB, tC, tD, points, checks)


def pythagorean_triple(m: int, n: int) -> tuple[int, int, int]:
    if not 0 < m < n:
        raise ValueError("need 0 < m < n")
    a, b, c = m * m + n * n, n * n - m * m, 2 * m * n
    assert a * a == b * b + c * c
    return a, b, c


def is_cor_pyth_form(a: int, b: int, c: int) -> bool:
    """A primitive Pythagorean triple a^2 = b^2 + c^2 with c even."""
    return (min(a, b, c) > 0 and a * a == b * b + c * c
            and gcd(gcd(a, b), c) == 1 and c % 2 == 0)


def qform_to_word(a: int, e: int, d: int) -> str:
    """Word w whose matrix [[a, b], [c, d]] has b + c = e, b - c = n >= 0,
    where e^2 - 4ad = n^2 - 4."""
    if a < 1 or d < 1 or e < 0:
        raise NotRealizable("need a, d >= 1 and e >= 0")
    disc = e * e - 4 * a * d + 4
    n = isqrt(disc) if disc >= 0 else -1
    if n < 0 or n * n != disc:
        raise NotRealizable(f"discriminant {e * e - 4 * a * d} is not of the form n^2 - 4")
    b, c = (e + n) // 2, (e - n) // 2
    m = Mat2(a, b, c, d)
    if c < 0 or m.det() != 1:
        raise NotRealizable(f"matrix {m.rows()} is not nonnegative unimodular")
    return factor_sl2(m)
