"""Expert shortest paths over the (cell, heading) state graph.

Every primitive action (forward or either turn) costs one step, so plain BFS
with a fixed expansion order is optimal.  The expansion order
forward < turn-left < turn-right makes the recovered action sequence the
lexicographically smallest among all minimum-length ones, which keeps
generated datasets reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..world.layout import Cell, HouseLayout
from ..world.sim import Action, AgentState, UnreachableError, distance_field, step

DEFAULT_SUCCESS_RADIUS = 3


@dataclass
class ExpertTrajectory:
    states: list[AgentState]  # length = len(actions) + 1
    actions: list[int]
    target_cell: Cell
    radius: int

    def __len__(self) -> int:
        return len(self.actions)


def goal_cells(house: HouseLayout, target_cell: Cell, radius: int) -> set[Cell]:
    """Cells counting as 'arrived': within `radius` and inside the target's room."""
    dist = distance_field(house, target_cell)
    room_id = house.room_at(target_cell)
    if room_id is None:
        raise UnreachableError(f"target {target_cell} is not inside a room")
    room = house.rooms[room_id]
    return {cell for cell in room.cells() if 0 <= dist[cell] <= radius}


def shortest_path(house: HouseLayout, start: AgentState, target_cell: Cell,
                  radius: int = DEFAULT_SUCCESS_RADIUS) -> ExpertTrajectory:
    """Minimum-action trajectory from `start` into the goal set around `target_cell`."""
    if not house.traversable(start.cell):
        raise UnreachableError(f"start cell {start.cell} is not traversable")
    goals = goal_cells(house, target_cell, radius)
    if not goals:
        raise UnreachableError(f"no reachable goal cells around {target_cell}")

    if start.cell in goals:
        return ExpertTrajectory([start], [], target_cell, radius)

    came_from: dict[AgentState, tuple[AgentState, int]] = {start: (start, -1)}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for action in (Action.FORWARD, Action.TURN_LEFT, Action.TURN_RIGHT):
            nxt, collided = step(house, state, action)
            if collided or nxt in came_from:
                continue
            came_from[nxt] = (state, int(action))
            if nxt.cell in goals:
                return _reconstruct(came_from, start, nxt, target_cell, radius)
            queue.append(nxt)
    raise UnreachableError(f"target {target_cell} unreachable from {start.cell}")


def _reconstruct(came_from, start, goal, target_cell, radius) -> ExpertTrajectory:
    states = [goal]
    actions: list[int] = []
    cur = goal
    while cur != start:
        prev, action = came_from[cur]
        actions.append(action)
        states.append(prev)
        cur = prev
    states.reverse()
    actions.reverse()
    return ExpertTrajectory(states, actions, target_cell, radius)
