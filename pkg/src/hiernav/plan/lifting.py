"""Lifting primitive trajectories into subgoal-annotated plans.

A trajectory is segmented at room-transition boundaries (the first state
inside each newly entered room).  A traversal segment is labeled exit-room
when the room's usable out-degree is exactly one (its only doorway, or the
doorway not entered through), otherwise find-room[type of the next room].
The final in-room segment is find-object[target type], and an answer subgoal
with an empty extent is always appended.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..world.layout import Cell, HouseLayout
from ..world.questions import Question
from .shortest_path import ExpertTrajectory, goal_cells
from .subgoals import Subgoal, SubgoalSpace, Task


class PlanError(ValueError):
    pass


@dataclass
class SegmentInfo:
    subgoal: Subgoal
    start: int
    end: int  # half-open extent [start, end) over trajectory actions
    target_cell: Cell | None = None
    door_id: int | None = None        # exit-room: the door to leave through
    target_room_id: int | None = None  # find-room: the room to enter
    target_object_id: int | None = None  # find-object: the object to approach
    entry_door_id: int | None = None   # door the segment's room was entered through
    start_room_id: int | None = None

    def __len__(self) -> int:
        return self.end - self.start


@dataclass
class AnnotatedPlan:
    segments: list[SegmentInfo]

    @property
    def subgoals(self) -> list[Subgoal]:
        return [s.subgoal for s in self.segments]

    @property
    def extents(self) -> list[tuple[int, int]]:
        return [(s.start, s.end) for s in self.segments]

    def motion_segments(self) -> list[SegmentInfo]:
        return [s for s in self.segments if s.subgoal.task != Task.ANSWER]


def room_out_degree(house: HouseLayout, room_id: int, entry_door: int | None = None) -> int:
    """Number of the room's doorways, excluding the entry door when given."""
    doors = house.doors_of_room(room_id)
    return sum(1 for d in doors if d.door_id != entry_door)


def _room_visits(house: HouseLayout, traj: ExpertTrajectory):
    """(room_id, first state index, entry door id) per room visit, in order.

    Doorway cells belong to no room; steps spent on them attach to the segment
    of the room being left, and a spawn on a doorway merges into the first
    room entered (zero-length transitions never produce segments).
    """
    visits: list[tuple[int, int, int | None]] = []
    last_door: int | None = None
    current_room: int | None = None
    for idx, state in enumerate(traj.states):
        room = house.room_at(state.cell)
        if room is None:
            door = house.door_at(state.cell)
            if door is not None:
                last_door = door.door_id
            continue
        if room != current_room:
            entry = last_door if visits else None
            visits.append((room, idx, entry))
            current_room = room
            last_door = None
    return visits


def lift_trajectory(house: HouseLayout, traj: ExpertTrajectory,
                    question: Question) -> AnnotatedPlan:
    """Convert an expert trajectory for `question` into an annotated plan."""
    target = house.object_by_id(question.target_object_id)
    if traj.target_cell != target.cell:
        raise PlanError("trajectory was not planned for the question's target object")
    final_cell = traj.states[-1].cell
    if final_cell not in goal_cells(house, target.cell, traj.radius):
        raise PlanError("trajectory does not terminate at the question's target")

    visits = _room_visits(house, traj)
    if not visits:
        raise PlanError("trajectory never enters a room")
    if visits[-1][0] != target.room_id:
        raise PlanError("trajectory does not end in the target's room")

    total = len(traj.actions)
    segments: list[SegmentInfo] = []
    for k in range(len(visits) - 1):
        room_id, start_idx, entry_door = visits[k]
        next_room, boundary, crossed_door = visits[k + 1]
        start = 0 if k == 0 else start_idx
        usable = room_out_degree(house, room_id, entry_door)
        if usable == 1:
            subgoal = Subgoal(Task.EXIT_ROOM)
        else:
            subgoal = Subgoal(Task.FIND_ROOM, house.rooms[next_room].room_type)
        segments.append(SegmentInfo(
            subgoal=subgoal,
            start=start,
            end=boundary,
            target_cell=traj.states[boundary].cell,
            door_id=crossed_door,
            target_room_id=next_room,
            entry_door_id=entry_door,
            start_room_id=room_id,
        ))

    dest_room, dest_start, dest_entry = visits[-1]
    find_start = 0 if len(visits) == 1 else dest_start
    if find_start < total:
        segments.append(SegmentInfo(
            subgoal=Subgoal(Task.FIND_OBJECT, target.object_type),
            start=find_start,
            end=total,
            target_cell=target.cell,
            target_object_id=target.object_id,
            entry_door_id=dest_entry,
            start_room_id=dest_room,
        ))
    # an empty find-object extent (already within the success radius on room
    # entry) is dropped and merged into the answer subgoal

    segments.append(SegmentInfo(subgoal=Subgoal(Task.ANSWER), start=total, end=total))
    plan = AnnotatedPlan(segments)
    _check_partition(plan, total)
    return plan


def _check_partition(plan: AnnotatedPlan, total: int) -> None:
    cursor = 0
    for seg in plan.motion_segments():
        if seg.start != cursor or seg.end < seg.start:
            raise PlanError(f"segment extents do not partition the trajectory: {plan.extents}")
        cursor = seg.end
    if cursor != total:
        raise PlanError(f"segments cover [0, {cursor}) but trajectory has {total} actions")
    last = plan.segments[-1]
    if last.subgoal.task != Task.ANSWER or len(last) != 0:
        raise PlanError("plan must end with an empty answer subgoal")


def plan_token_names(plan: AnnotatedPlan, space: SubgoalSpace) -> list[str]:
    return [space.name(g) for g in plan.subgoals]
