"""Subgoal vocabulary: <task, argument> pairs and their flat indexing."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .. import vocab


class Task(IntEnum):
    EXIT_ROOM = 0
    FIND_ROOM = 1
    FIND_OBJECT = 2
    ANSWER = 3


TASK_NAMES = ["exit-room", "find-room", "find-object", "answer"]
MOTION_TASKS = (Task.EXIT_ROOM, Task.FIND_ROOM, Task.FIND_OBJECT)


@dataclass(frozen=True)
class Subgoal:
    task: Task
    argument: int | None = None

    def __post_init__(self):
        if self.task in (Task.EXIT_ROOM, Task.ANSWER):
            if self.argument is not None:
                raise ValueError(f"{TASK_NAMES[self.task]} takes no argument")
        elif self.argument is None:
            raise ValueError(f"{TASK_NAMES[self.task]} requires an argument")


class SubgoalSpace:
    """Flat index over all subgoals: exit-room, answer, find-room[*], find-object[*].

    Total size is |room types| + |object types| + 2.  Index `size` is reserved
    as the distinguished start token for "no previous subgoal".
    """

    def __init__(self, n_room_types: int, n_object_types: int):
        self.n_room_types = n_room_types
        self.n_object_types = n_object_types

    @property
    def size(self) -> int:
        return self.n_room_types + self.n_object_types + 2

    @property
    def start_token(self) -> int:
        return self.size

    def index(self, g: Subgoal) -> int:
        if g.task == Task.EXIT_ROOM:
            return 0
        if g.task == Task.ANSWER:
            return 1
        if g.task == Task.FIND_ROOM:
            return 2 + g.argument
        return 2 + self.n_room_types + g.argument

    def subgoal(self, idx: int) -> Subgoal:
        if idx == 0:
            return Subgoal(Task.EXIT_ROOM)
        if idx == 1:
            return Subgoal(Task.ANSWER)
        idx -= 2
        if idx < self.n_room_types:
            return Subgoal(Task.FIND_ROOM, idx)
        idx -= self.n_room_types
        if idx < self.n_object_types:
            return Subgoal(Task.FIND_OBJECT, idx)
        raise IndexError("subgoal index out of range")

    def argument_row(self, g: Subgoal) -> int | None:
        """Row in the shared argument-embedding table; None for argument-free tasks."""
        if g.task == Task.FIND_ROOM:
            return g.argument
        if g.task == Task.FIND_OBJECT:
            return self.n_room_types + g.argument
        return None

    def name(self, g: Subgoal) -> str:
        if g.task == Task.FIND_ROOM:
            return f"find-room[{vocab.room_type_names(self.n_room_types)[g.argument]}]"
        if g.task == Task.FIND_OBJECT:
            return f"find-object[{vocab.object_type_names(self.n_object_types)[g.argument]}]"
        return TASK_NAMES[g.task]
