"""Lattice-path model on the fringe of a frontier word."""
from __future__ import annotations

from itertools import combinations

from ..errors import MalformedWord
from ..words import check_word


def fringe_of_word(w: str) -> tuple[list[tuple[int, int]], set[tuple[int, int]]]:
    """Staircase points of w starting at (0, 0), and the fringe they span."""
    pts = [(0, 0)]
    for ch in check_word(w):
        x, y = pts[-1]
        pts.append((x + 1, y) if ch == "x" else (x, y - 1))
    fringe = set(pts) | {(x + 1, y + 1) for x, y in pts}
    return pts, fringe


def count_fringe_paths(w: str) -> int:
    """Number of (1,0)/(0,-1) paths from the first to the last point of w
    that stay inside the fringe, found by enumerating every monotone path."""
    if len(w) < 2 or w[0] != "y" or w[-1] != "x":
        raise MalformedWord(f"a below-frontier word starts with y and ends with x: {w!r}")
    pts, fringe = fringe_of_word(w)
    nx, ny = w.count("x"), w.count("y")
    total = 0
    for rights in combinations(range(nx + ny), nx):
        rset = set(rights)
        x = y = 0
        for step in range(nx + ny):
            if step in rset:
                x += 1
            else:
                y -= 1
            if (x, y) not in fringe:
                break
        else:
            total += 1
    return total
