"""House layout data model: grid of cell kinds, typed rooms, doorways, objects.

A layout is immutable after construction.  The two private caches
(`_dist_cache`, `_feature_cache`) are memoization only and never change the
observable state, so layouts stay safe to share across worker threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

WALL = 0
FREE = 1
DOOR = 2

KIND_CHARS = {WALL: "W", FREE: "F", DOOR: "D"}
CHAR_KINDS = {v: k for k, v in KIND_CHARS.items()}

Cell = tuple[int, int]


class LayoutError(ValueError):
    """A layout violates a structural invariant."""


@dataclass
class Room:
    room_id: int
    room_type: int
    # inclusive interior bounds (wall cells excluded)
    r0: int
    c0: int
    r1: int
    c1: int

    def cells(self) -> list[Cell]:
        return [(r, c) for r in range(self.r0, self.r1 + 1) for c in range(self.c0, self.c1 + 1)]

    def contains(self, cell: Cell) -> bool:
        return self.r0 <= cell[0] <= self.r1 and self.c0 <= cell[1] <= self.c1


@dataclass
class Doorway:
    door_id: int
    cell: Cell
    room_a: int
    room_b: int


@dataclass
class WorldObject:
    object_id: int
    object_type: int
    color: int
    cell: Cell
    room_id: int


@dataclass
class HouseLayout:
    uid: str
    grid: np.ndarray  # int8, kinds
    rooms: list[Room]
    doorways: list[Doorway]
    objects: list[WorldObject]
    n_room_types: int
    n_object_types: int
    n_colors: int
    _dist_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _feature_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _room_of: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def height(self) -> int:
        return self.grid.shape[0]

    @property
    def width(self) -> int:
        return self.grid.shape[1]

    @property
    def room_of(self) -> np.ndarray:
        """Room id per cell, -1 for walls and doorways."""
        if self._room_of is None:
            m = np.full(self.grid.shape, -1, dtype=np.int16)
            for room in self.rooms:
                m[room.r0 : room.r1 + 1, room.c0 : room.c1 + 1] = room.room_id
            self._room_of = m
        return self._room_of

    def room_at(self, cell: Cell) -> int | None:
        rid = int(self.room_of[cell])
        return None if rid < 0 else rid

    def kind(self, cell: Cell) -> int:
        return int(self.grid[cell])

    def traversable(self, cell: Cell) -> bool:
        r, c = cell
        if not (0 <= r < self.height and 0 <= c < self.width):
            return False
        return self.grid[r, c] != WALL

    def doors_of_room(self, room_id: int) -> list[Doorway]:
        return [d for d in self.doorways if room_id in (d.room_a, d.room_b)]

    def room_neighbors(self, room_id: int) -> set[int]:
        out = set()
        for d in self.doors_of_room(room_id):
            out.add(d.room_b if d.room_a == room_id else d.room_a)
        return out

    def objects_in_room(self, room_id: int) -> list[WorldObject]:
        return [o for o in self.objects if o.room_id == room_id]

    def object_by_id(self, object_id: int) -> WorldObject:
        for o in self.objects:
            if o.object_id == object_id:
                return o
        raise KeyError(f"no object with id {object_id}")

    def door_by_id(self, door_id: int) -> Doorway:
        for d in self.doorways:
            if d.door_id == door_id:
                return d
        raise KeyError(f"no doorway with id {door_id}")

    def door_at(self, cell: Cell) -> Doorway | None:
        for d in self.doorways:
            if d.cell == cell:
                return d
        return None


def validate_layout(house: HouseLayout) -> None:
    """Check every structural invariant; raise LayoutError on the first failure."""
    grid = house.grid
    h, w = grid.shape

    # border must be solid wall so agents can never leave the grid
    if not (np.all(grid[0] == WALL) and np.all(grid[-1] == WALL)
            and np.all(grid[:, 0] == WALL) and np.all(grid[:, -1] == WALL)):
        raise LayoutError("grid border is not solid wall")

    # every free cell belongs to exactly one room
    claimed = np.zeros(grid.shape, dtype=np.int32)
    for room in house.rooms:
        if not (0 < room.r0 <= room.r1 < h - 1 and 0 < room.c0 <= room.c1 < w - 1):
            raise LayoutError(f"room {room.room_id} extent out of bounds")
        if not (0 <= room.room_type < house.n_room_types):
            raise LayoutError(f"room {room.room_id} type out of vocabulary")
        claimed[room.r0 : room.r1 + 1, room.c0 : room.c1 + 1] += 1
    free_mask = grid == FREE
    if np.any(claimed[free_mask] != 1):
        raise LayoutError("a free cell is claimed by zero or multiple rooms")
    if np.any(claimed[~free_mask] != 0):
        raise LayoutError("a room extent covers a non-free cell")

    # doorways join exactly two distinct rooms and sit on DOOR cells
    seen_door_cells = set()
    room_ids = {r.room_id for r in house.rooms}
    for d in house.doorways:
        if grid[d.cell] != DOOR:
            raise LayoutError(f"doorway {d.door_id} not on a DOOR cell")
        if d.room_a == d.room_b:
            raise LayoutError(f"doorway {d.door_id} joins a room to itself")
        if d.room_a not in room_ids or d.room_b not in room_ids:
            raise LayoutError(f"doorway {d.door_id} references unknown room")
        if d.cell in seen_door_cells:
            raise LayoutError(f"duplicate doorway cell {d.cell}")
        seen_door_cells.add(d.cell)
        sides = _door_sides(house, d)
        if {house.room_at(sides[0]), house.room_at(sides[1])} != {d.room_a, d.room_b}:
            raise LayoutError(f"doorway {d.door_id} does not sit between its rooms")
    door_mask = grid == DOOR
    if int(door_mask.sum()) != len(house.doorways):
        raise LayoutError("DOOR cells and doorway list disagree")

    # every object on a free cell of its room, with in-vocabulary type/color
    seen_cells = set()
    for o in house.objects:
        if grid[o.cell] != FREE:
            raise LayoutError(f"object {o.object_id} not on a free cell")
        if house.room_at(o.cell) != o.room_id:
            raise LayoutError(f"object {o.object_id} outside its room")
        if not (0 <= o.object_type < house.n_object_types):
            raise LayoutError(f"object {o.object_id} type out of vocabulary")
        if not (0 <= o.color < house.n_colors):
            raise LayoutError(f"object {o.object_id} color out of vocabulary")
        if o.cell in seen_cells:
            raise LayoutError(f"two objects share cell {o.cell}")
        seen_cells.add(o.cell)

    # room graph connected
    if house.rooms:
        reached = {house.rooms[0].room_id}
        frontier = [house.rooms[0].room_id]
        while frontier:
            rid = frontier.pop()
            for nb in house.room_neighbors(rid):
                if nb not in reached:
                    reached.add(nb)
                    frontier.append(nb)
        if reached != room_ids:
            raise LayoutError("room graph is not connected")


def _door_sides(house: HouseLayout, door: Doorway) -> tuple[Cell, Cell]:
    """The two traversable cells a doorway connects (one per room)."""
    r, c = door.cell
    sides = [cell for cell in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))
             if house.traversable(cell) and house.grid[cell] == FREE]
    if len(sides) != 2:
        raise LayoutError(f"doorway {door.door_id} has {len(sides)} free neighbors")
    return sides[0], sides[1]


def door_exit_cell(house: HouseLayout, door: Doorway, from_room: int) -> Cell:
    """The free cell just beyond `door` when leaving `from_room`."""
    a, b = _door_sides(house, door)
    if house.room_at(a) == from_room:
        return b
    return a
