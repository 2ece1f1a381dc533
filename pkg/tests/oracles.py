"""Independent reference implementations used to cross-check the library.

Nothing here imports the package under test.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod


def mat_mul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mu_plain(word: str):
    """Product of (1 1; 0 1) for x and (1 0; 1 1) for y, as nested tuples."""
    m = ((1, 0), (0, 1))
    for ch in word:
        m = mat_mul(m, ((1, 1), (0, 1)) if ch == "x" else ((1, 0), (1, 1)))
    return m


def fringe_paths_dp(word: str) -> int:
    """Count monotone paths (steps (1,0) and (0,-1)) inside the fringe.

    The staircase starts at A = (0,0); x moves right, y moves up (y - 1).
    The fringe is the staircase plus its translate by (1,1). Counted by
    dynamic programming over the points sorted along the path direction.
    """
    pts = [(0, 0)]
    for ch in word:
        x, y = pts[-1]
        pts.append((x + 1, y) if ch == "x" else (x, y - 1))
    fringe = set(pts) | {(x + 1, y + 1) for x, y in pts}
    start, end = pts[0], pts[-1]
    order = sorted(fringe, key=lambda p: (p[0] - p[1]))
    ways = {start: 1}
    for p in order:
        if p == start:
            continue
        x, y = p
        ways[p] = ways.get((x - 1, y), 0) + ways.get((x, y + 1), 0)
    return ways.get(end, 0)


def euler_continuant(a) -> int:
    """Continuant by Euler's rule: delete disjoint adjacent pairs, each
    deletion contributing a factor -1, and multiply what remains."""
    n = len(a)
    total = 0
    for k in range(n // 2 + 1):
        for starts in combinations(range(n - 1), k):
            if any(s2 - s1 < 2 for s1, s2 in zip(starts, starts[1:])):
                continue
            removed = set(starts) | {s + 1 for s in starts}
            total += (-1) ** k * prod(a[i] for i in range(n) if i not in removed)
    return total


def poly_mul(p, q):
    """Multiply coefficient lists given highest degree first."""
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def satisfies_polynomial(seq, poly) -> bool:
    """Does sum_k poly[k] * seq[n + d - k] vanish for every window?"""
    d = len(poly) - 1
    return all(sum(c * seq[n + d - k] for k, c in enumerate(poly)) == 0 for n in range(len(seq) - d))


def frieze_plain(vertices, arrows, steps):
    """Frieze values by fixed-point sweeps, with Fractions.

    a(v, n+1) a(v, n) = 1 + prod_{w -> v} a(w, n+1) * prod_{v -> w} a(w, n).
    """
    rows = {v: [Fraction(1)] for v in vertices}
    for n in range(steps):
        done = set()
        while len(done) < len(vertices):
            for v in vertices:
                if v in done:
                    continue
                ins = [(u, m) for u, w, m in arrows if w == v]
                if any(u not in done for u, _ in ins):
                    continue
                outs = [(w, m) for u, w, m in arrows if u == v]
                num = 1 + prod(rows[u][n + 1] ** m for u, m in ins) * prod(rows[w][n] ** m for w, m in outs)
                rows[v].append(num / rows[v][n])
                done.add(v)
    return rows


def fib(n: int) -> int:
    """Fibonacci numbers with F_0 = F_1 = 1."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def det3(m) -> int:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
