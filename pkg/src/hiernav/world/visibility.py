"""Egocentric visibility: a 90-degree frontal cone with wall occlusion.

Line of sight between two cell centers is blocked when any strictly
intermediate wall cell's open interior is crossed by the sight segment.
Corner-grazing segments (e.g. exact diagonals touching a wall corner) do not
count as blocked.  The per-offset blocker lists are computed once, exactly,
with rational arithmetic, so runtime checks are table lookups.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .layout import WALL, Cell, HouseLayout


def _crossed_cells(f: int, l: int) -> list[tuple[int, int]]:
    """Relative cells whose open interior the center-to-center segment crosses,
    excluding both endpoint cells."""
    if (f, l) == (0, 0):
        return []
    half = Fraction(1, 2)
    blockers = []
    for a in range(min(0, f), max(0, f) + 1):
        for b in range(min(0, l), max(0, l) + 1):
            if (a, b) in ((0, 0), (f, l)):
                continue
            lo, hi = Fraction(0), Fraction(1)
            empty = False
            for delta, start, low_edge in ((f, half, a), (l, half, b)):
                if delta == 0:
                    if not (low_edge < start < low_edge + 1):
                        empty = True
                        break
                    continue
                t0 = (Fraction(low_edge) - start) / delta
                t1 = (Fraction(low_edge + 1) - start) / delta
                if t0 > t1:
                    t0, t1 = t1, t0
                lo, hi = max(lo, t0), min(hi, t1)
            if not empty and lo < hi:
                blockers.append((a, b))
    return blockers


@lru_cache(maxsize=None)
def _cone_table(cone_range: int) -> list[tuple[int, int, tuple[tuple[int, int], ...]]]:
    """(forward, lateral, blockers) for every offset in the frontal cone."""
    table = []
    for f in range(cone_range + 1):
        for l in range(-f, f + 1):
            table.append((f, l, tuple(_crossed_cells(f, l))))
    return table


def _to_absolute(cell: Cell, heading: int, f: int, l: int) -> Cell:
    r, c = cell
    if heading == 0:  # N
        return (r - f, c + l)
    if heading == 1:  # E
        return (r + l, c + f)
    if heading == 2:  # S
        return (r + f, c - l)
    return (r - l, c - f)  # W


def visible_cone_cells(house: HouseLayout, cell: Cell, heading: int,
                       cone_range: int) -> list[tuple[Cell, int, int]]:
    """Visible (absolute cell, forward distance, lateral offset) triples.

    Lateral offset is positive to the agent's right.  Cells outside the grid
    are dropped; wall cells themselves are visible (you can see a wall) but
    block everything behind them.
    """
    grid = house.grid
    h, w = grid.shape
    out = []
    for f, l, blockers in _cone_table(cone_range):
        ar, ac = _to_absolute(cell, heading, f, l)
        if not (0 <= ar < h and 0 <= ac < w):
            continue
        clear = True
        for bf, bl in blockers:
            br, bc = _to_absolute(cell, heading, bf, bl)
            if not (0 <= br < h and 0 <= bc < w) or grid[br, bc] == WALL:
                clear = False
                break
        if clear:
            out.append(((ar, ac), f, l))
    return out
