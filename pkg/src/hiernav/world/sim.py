"""Agent kinematics and navigable distances on a house grid.

Motion is 4-connected: `forward` advances one cell along the heading when the
target cell is traversable (free or doorway) and otherwise leaves the state
unchanged with a collision flag; turns rotate 90 degrees and never collide.
"""

from __future__ import annotations

from collections import deque
from enum import IntEnum
from typing import NamedTuple

import numpy as np

from .layout import Cell, HouseLayout


class Heading(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3


# (dr, dc) per heading; rows grow southward
HEADING_VECTORS = {
    Heading.N: (-1, 0),
    Heading.E: (0, 1),
    Heading.S: (1, 0),
    Heading.W: (0, -1),
}

HEADING_NAMES = ["N", "E", "S", "W"]


class Action(IntEnum):
    FORWARD = 0
    TURN_LEFT = 1
    TURN_RIGHT = 2
    STOP = 3


ACTION_NAMES = ["forward", "turn-left", "turn-right", "stop"]
MOTION_ACTIONS = (Action.FORWARD, Action.TURN_LEFT, Action.TURN_RIGHT)


class AgentState(NamedTuple):
    cell: Cell
    heading: int


def turn_left(heading: int) -> int:
    return (heading - 1) % 4


def turn_right(heading: int) -> int:
    return (heading + 1) % 4


def forward_cell(cell: Cell, heading: int) -> Cell:
    dr, dc = HEADING_VECTORS[Heading(heading)]
    return (cell[0] + dr, cell[1] + dc)


def step(house: HouseLayout, state: AgentState, action: int) -> tuple[AgentState, bool]:
    """Apply one primitive motion action; returns (new state, collided)."""
    if action == Action.TURN_LEFT:
        return AgentState(state.cell, turn_left(state.heading)), False
    if action == Action.TURN_RIGHT:
        return AgentState(state.cell, turn_right(state.heading)), False
    if action == Action.FORWARD:
        nxt = forward_cell(state.cell, state.heading)
        if house.traversable(nxt):
            return AgentState(nxt, state.heading), False
        return state, True
    raise ValueError(f"not a simulator action: {action}")


class UnreachableError(RuntimeError):
    """No traversable path between two cells; indicates a generator bug."""


def distance_field(house: HouseLayout, target: Cell) -> np.ndarray:
    """BFS distances (in cells) from every traversable cell to `target`.

    Cached per house; -1 marks unreachable or non-traversable cells.
    """
    cached = house._dist_cache.get(target)
    if cached is not None:
        return cached
    if not house.traversable(target):
        raise UnreachableError(f"target cell {target} is not traversable")
    dist = np.full(house.grid.shape, -1, dtype=np.int32)
    dist[target] = 0
    queue = deque([target])
    while queue:
        r, c = queue.popleft()
        d = dist[r, c] + 1
        for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if house.traversable(nb) and dist[nb] < 0:
                dist[nb] = d
                queue.append(nb)
    dist.flags.writeable = False
    house._dist_cache[target] = dist
    return dist


def geodesic_distance(house: HouseLayout, frm: Cell, to: Cell) -> int:
    """Length of the shortest traversable 4-connected path, in cells."""
    if not house.traversable(frm):
        raise UnreachableError(f"cell {frm} is not traversable")
    d = int(distance_field(house, to)[frm])
    if d < 0:
        raise UnreachableError(f"no path from {frm} to {to}")
    return d


def free_room_cells(house: HouseLayout) -> list[Cell]:
    """All in-room free cells (doorways excluded), row-major order."""
    out = []
    for room in house.rooms:
        out.extend(room.cells())
    return sorted(out)
