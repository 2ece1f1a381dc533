"""Words over {x, y}, the morphism mu into SL2(Z), and continuants."""
from __future__ import annotations

from typing import Any, Sequence

from .errors import MalformedWord, NotFactorable
from .exact_algebra import Mat2

MU_X = Mat2(1, 1, 0, 1)
MU_Y = Mat2(1, 0, 1, 1)


def check_word(w: str) -> str:
    if not isinstance(w, str) or any(ch not in "xy" for ch in w):
        raise MalformedWord(f"not a word over {{x,y}}: {w!r}")
    return w


def mu(w: str) -> Mat2:
    """Image of w under the morphism x -> [[1,1],[0,1]], y -> [[1,0],[1,1]]."""
    check_word(w)
    a, b, c, d = 1, 0, 0, 1
    for ch in w:
        if ch == "x":
            b += a
            d += c
        else:
            a += b
            c += d
    return Mat2(a, b, c, d)


def swap_letters(w: str) -> str:
    return check_word(w).translate(str.maketrans("xy", "yx"))


def transpose_word(w: str) -> str:
    """Reverse w and exchange x with y; mu of the result is mu(w) transposed."""
    return swap_letters(w)[::-1]


def factor_sl2(m: Mat2) -> str:
    """The unique word w with mu(w) == m, for m nonnegative of determinant 1."""
    a, b, c, d = m.a, m.b, m.c, m.d
    if min(a, b, c, d) < 0 or a * d - b * c != 1:
        raise NotFactorable(f"not a nonnegative SL2 matrix: {m.rows()}")
    letters: list[str] = []
    while (a, b, c, d) != (1, 0, 0, 1):
        peel_x = b >= a and d >= c
        peel_y = a >= b and c >= d
        if peel_x == peel_y:
            raise AssertionError(f"ambiguous or impossible peel at {[[a, b], [c, d]]}")
        if peel_x:
            b, d = b - a, d - c
            letters.append("x")
        else:
            a, c = a - b, c - d
            letters.append("y")
    return "".join(reversed(letters))


def continuant(a: Sequence[Any]) -> Any:
    """q(a_1..a_n) with q() = 1 and q_n = q_{n-1} a_n - q_{n-2}."""
    prev, cur = 0, 1
    for x in a:
        prev, cur = cur, cur * x - prev
    return cur


def q_matrix(a: Any) -> Mat2:
    return Mat2(0, -1, 1, a)


def q_matrix_product(a: Sequence[Any]) -> Mat2:
    out = Mat2.identity()
    for x in a:
        out = out @ q_matrix(x)
    return out


def letter_counts(w: str) -> tuple[int, int]:
    return w.count("x"), w.count("y")
