"""Procedural grid-house generator.

Recursive binary partition of the floor area into rectangular rooms separated
by one-cell walls, then doorways carved on shared walls: a random spanning
tree keeps the room graph connected and optional extra doors add cycles.
Identical (seed, config) pairs produce identical layouts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .layout import DOOR, FREE, WALL, Doorway, HouseLayout, Room, WorldObject, validate_layout

MIN_ROOM_SIDE = 3


class GenerationError(RuntimeError):
    """The configuration could not produce a valid house within the retry budget."""


@dataclass
class GenConfig:
    grid_height: int = 21
    grid_width: int = 21
    min_rooms: int = 3
    max_rooms: int = 6
    min_objects_per_room: int = 1
    max_objects_per_room: int = 3
    n_room_types: int = 12
    n_object_types: int = 50
    n_colors: int = 8
    extra_door_prob: float = 0.3
    max_retries: int = 25

    def validate(self) -> None:
        if self.grid_height < MIN_ROOM_SIDE + 2 or self.grid_width < MIN_ROOM_SIDE + 2:
            raise GenerationError("grid too small for a single room")
        if not (1 <= self.min_rooms <= self.max_rooms):
            raise GenerationError("bad room count range")
        if not (0 <= self.min_objects_per_room <= self.max_objects_per_room):
            raise GenerationError("bad objects-per-room range")
        if self.max_objects_per_room > self.n_object_types:
            raise GenerationError("more objects per room than object types")


def generate_house(seed: int, config: GenConfig | None = None) -> HouseLayout:
    """Build a house satisfying every layout invariant, deterministically."""
    config = config or GenConfig()
    config.validate()
    last_err: Exception | None = None
    for attempt in range(config.max_retries):
        rng = np.random.default_rng(np.random.PCG64(seed * 1009 + attempt))
        try:
            house = _generate_once(seed, rng, config)
        except _RetryGeneration as err:
            last_err = err
            continue
        validate_layout(house)
        return house
    raise GenerationError(
        f"could not generate a house for seed={seed} after "
        f"{config.max_retries} attempts: {last_err}"
    )


class _RetryGeneration(Exception):
    pass


def _generate_once(seed: int, rng: np.random.Generator, cfg: GenConfig) -> HouseLayout:
    grid = np.full((cfg.grid_height, cfg.grid_width), WALL, dtype=np.int8)
    target_rooms = int(rng.integers(cfg.min_rooms, cfg.max_rooms + 1))

    # regions are (r0, c0, r1, c1) interior bounds, inclusive
    regions = [(1, 1, cfg.grid_height - 2, cfg.grid_width - 2)]
    while len(regions) < target_rooms:
        splittable = [i for i, reg in enumerate(regions) if _can_split(reg)]
        if not splittable:
            break
        # split the largest splittable region to keep room sizes even
        idx = max(splittable, key=lambda i: _area(regions[i]))
        a, b = _split(regions[idx], rng)
        regions[idx : idx + 1] = [a, b]
    if len(regions) < cfg.min_rooms:
        raise _RetryGeneration(f"only fit {len(regions)} rooms, need >= {cfg.min_rooms}")

    rooms = []
    for rid, (r0, c0, r1, c1) in enumerate(regions):
        grid[r0 : r1 + 1, c0 : c1 + 1] = FREE
        rooms.append(Room(room_id=rid, room_type=int(rng.integers(cfg.n_room_types)),
                          r0=r0, c0=c0, r1=r1, c1=c1))

    doorways = _carve_doors(grid, rooms, rng, cfg)

    objects = []
    oid = 0
    for room in rooms:
        cells = room.cells()
        k = int(rng.integers(cfg.min_objects_per_room, cfg.max_objects_per_room + 1))
        k = min(k, len(cells))
        picked = rng.choice(len(cells), size=k, replace=False)
        # distinct types within a room keep question targets unambiguous
        types = rng.choice(cfg.n_object_types, size=k, replace=False)
        for j in range(k):
            objects.append(WorldObject(
                object_id=oid,
                object_type=int(types[j]),
                color=int(rng.integers(cfg.n_colors)),
                cell=tuple(int(x) for x in cells[int(picked[j])]),
                room_id=room.room_id,
            ))
            oid += 1

    return HouseLayout(
        uid=f"house-{seed:08d}",
        grid=grid,
        rooms=rooms,
        doorways=doorways,
        objects=objects,
        n_room_types=cfg.n_room_types,
        n_object_types=cfg.n_object_types,
        n_colors=cfg.n_colors,
    )


def _area(reg: tuple[int, int, int, int]) -> int:
    r0, c0, r1, c1 = reg
    return (r1 - r0 + 1) * (c1 - c0 + 1)


def _can_split(reg: tuple[int, int, int, int]) -> bool:
    r0, c0, r1, c1 = reg
    return (r1 - r0 + 1) >= 2 * MIN_ROOM_SIDE + 1 or (c1 - c0 + 1) >= 2 * MIN_ROOM_SIDE + 1


def _split(reg, rng: np.random.Generator):
    r0, c0, r1, c1 = reg
    height, width = r1 - r0 + 1, c1 - c0 + 1
    can_h = height >= 2 * MIN_ROOM_SIDE + 1
    can_v = width >= 2 * MIN_ROOM_SIDE + 1
    if can_h and can_v:
        horizontal = height >= width if height != width else bool(rng.integers(2))
    else:
        horizontal = can_h
    if horizontal:
        cut = int(rng.integers(r0 + MIN_ROOM_SIDE, r1 - MIN_ROOM_SIDE + 1))
        return (r0, c0, cut - 1, c1), (cut + 1, c0, r1, c1)
    cut = int(rng.integers(c0 + MIN_ROOM_SIDE, c1 - MIN_ROOM_SIDE + 1))
    return (r0, c0, r1, cut - 1), (r0, cut + 1, r1, c1)


def _door_candidates(grid: np.ndarray, rooms: list[Room]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Wall cells lying between two room interiors, keyed by the room pair."""
    room_of = np.full(grid.shape, -1, dtype=np.int32)
    for room in rooms:
        room_of[room.r0 : room.r1 + 1, room.c0 : room.c1 + 1] = room.room_id
    cands: dict[tuple[int, int], list[tuple[int, int]]] = {}
    h, w = grid.shape
    for r in range(1, h - 1):
        for c in range(1, w - 1):
            if grid[r, c] != WALL:
                continue
            vert = (room_of[r - 1, c], room_of[r + 1, c])
            horz = (room_of[r, c - 1], room_of[r, c + 1])
            for a, b in (vert, horz):
                if a >= 0 and b >= 0 and a != b:
                    key = (min(a, b), max(a, b))
                    cands.setdefault(key, []).append((r, c))
    return cands


def _carve_doors(grid, rooms, rng: np.random.Generator, cfg: GenConfig) -> list[Doorway]:
    cands = _door_candidates(grid, rooms)
    if len(rooms) > 1 and not cands:
        raise _RetryGeneration("no adjacent room pairs for doors")

    pairs = sorted(cands)
    # randomized spanning tree over the adjacency graph
    order = list(rng.permutation(len(pairs))) if pairs else []
    parent = {room.room_id: room.room_id for room in rooms}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    doorways: list[Doorway] = []
    chosen: set[tuple[int, int]] = set()

    def add_door(pair):
        cells = cands[pair]
        cell = cells[int(rng.integers(len(cells)))]
        grid[cell] = DOOR
        doorways.append(Doorway(door_id=len(doorways), cell=cell,
                                room_a=pair[0], room_b=pair[1]))
        chosen.add(pair)

    for i in order:
        a, b = pairs[i]
        if find(a) != find(b):
            parent[find(a)] = find(b)
            add_door(pairs[i])
    roots = {find(room.room_id) for room in rooms}
    if len(roots) > 1:
        raise _RetryGeneration("room adjacency graph is disconnected")

    for pair in pairs:
        if pair not in chosen and rng.random() < cfg.extra_door_prob:
            add_door(pair)
    return doorways
