from .subgoals import MOTION_TASKS, TASK_NAMES, Subgoal, SubgoalSpace, Task
from .shortest_path import DEFAULT_SUCCESS_RADIUS, ExpertTrajectory, goal_cells, shortest_path
from .lifting import AnnotatedPlan, PlanError, SegmentInfo, lift_trajectory, plan_token_names, room_out_degree
from .corpus import (
    CORPUS_FORMAT_VERSION,
    PREV_ACTION_START,
    CorpusError,
    PlanCorpus,
    PlanRecord,
    build_dataset,
    load_corpus,
    save_corpus,
)

__all__ = [
    "AnnotatedPlan",
    "CORPUS_FORMAT_VERSION",
    "CorpusError",
    "DEFAULT_SUCCESS_RADIUS",
    "ExpertTrajectory",
    "MOTION_TASKS",
    "PREV_ACTION_START",
    "PlanCorpus",
    "PlanError",
    "PlanRecord",
    "SegmentInfo",
    "Subgoal",
    "SubgoalSpace",
    "TASK_NAMES",
    "Task",
    "build_dataset",
    "goal_cells",
    "lift_trajectory",
    "load_corpus",
    "plan_token_names",
    "room_out_degree",
    "save_corpus",
    "shortest_path",
]
