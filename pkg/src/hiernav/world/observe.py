"""Deterministic egocentric feature extraction.

The feature vector is a fixed-width concatenation of interpretable blocks:

    [0:4]      occupancy patch, blocked flags for (front, left, right, front+2)
    [4:8]      heading one-hot (N, E, S, W)
    [8:8+R]    current room-type one-hot (all zero while standing on a doorway)
    [+3]       doorway-in-cone flags for the left / center / right sectors
    [+C]       per-color proximity of visible objects
    [+B]       per-type-bin proximity of visible objects (B = remaining dims;
               types are folded modulo B when the vocabulary is larger)

Proximity entries are 1 - f/(range+1) for the nearest qualifying visible cell
at forward distance f, so closer means larger, and everything lies in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .layout import DOOR, HouseLayout
from .sim import AgentState, forward_cell, turn_left, turn_right
from .visibility import visible_cone_cells

PATCH_DIM = 4
HEADING_DIM = 4
DOOR_SECTOR_DIM = 3


class FeatureConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FeatureConfig:
    dim: int = 32
    cone_range: int = 6


def min_feature_dim(n_room_types: int, n_colors: int) -> int:
    """Smallest dim leaving at least one object bin."""
    return PATCH_DIM + HEADING_DIM + n_room_types + DOOR_SECTOR_DIM + n_colors + 1


class FeatureExtractor:
    """Computes (and caches per house) observation vectors."""

    def __init__(self, house_like, config: FeatureConfig = FeatureConfig()):
        self.config = config
        self.n_room_types = house_like.n_room_types
        self.n_object_types = house_like.n_object_types
        self.n_colors = house_like.n_colors
        needed = min_feature_dim(self.n_room_types, self.n_colors)
        if config.dim < needed:
            raise FeatureConfigError(
                f"feature dim {config.dim} too small; need >= {needed} for "
                f"{self.n_room_types} room types and {self.n_colors} colors"
            )
        self._room_off = PATCH_DIM + HEADING_DIM
        self._door_off = self._room_off + self.n_room_types
        self._color_off = self._door_off + DOOR_SECTOR_DIM
        self._obj_off = self._color_off + self.n_colors
        self.n_object_bins = config.dim - self._obj_off
        self._key = (config.dim, config.cone_range, self.n_room_types,
                     self.n_colors, self.n_object_types)

    @property
    def dim(self) -> int:
        return self.config.dim

    def object_bin(self, object_type: int) -> int:
        return object_type % self.n_object_bins

    def observe(self, house: HouseLayout, state: AgentState) -> np.ndarray:
        cache_key = (self._key, state.cell, state.heading)
        cached = house._feature_cache.get(cache_key)
        if cached is not None:
            return cached
        v = self._compute(house, state)
        v.flags.writeable = False
        house._feature_cache[cache_key] = v
        return v

    def _compute(self, house: HouseLayout, state: AgentState) -> np.ndarray:
        v = np.zeros(self.config.dim, dtype=np.float64)
        cell, heading = state.cell, state.heading

        front = forward_cell(cell, heading)
        left = forward_cell(cell, turn_left(heading))
        right = forward_cell(cell, turn_right(heading))
        front2 = forward_cell(front, heading)
        for i, probe in enumerate((front, left, right, front2)):
            v[i] = 0.0 if house.traversable(probe) else 1.0

        v[PATCH_DIM + heading] = 1.0

        room_id = house.room_at(cell)
        if room_id is not None:
            v[self._room_off + house.rooms[room_id].room_type] = 1.0

        objects_at = {}
        for obj in house.objects:
            objects_at.setdefault(obj.cell, []).append(obj)

        rng = self.config.cone_range
        for vis_cell, f, l in visible_cone_cells(house, cell, heading, rng):
            w = 1.0 - f / (rng + 1.0)
            if house.grid[vis_cell] == DOOR:
                sector = 1 if l == 0 else (0 if l < 0 else 2)
                idx = self._door_off + sector
                v[idx] = max(v[idx], w)
            for obj in objects_at.get(vis_cell, ()):
                cidx = self._color_off + obj.color
                v[cidx] = max(v[cidx], w)
                bidx = self._obj_off + self.object_bin(obj.object_type)
                v[bidx] = max(v[bidx], w)
        return v
