"""Expert plan corpus: building, sample iteration, JSONL persistence.

One record per (house, question): the expert trajectory, its annotated plan,
and the observation features along the way.  The corpus feeds three training
surfaces: boundary-state subgoal decisions for the master policy, per-step
action decisions keyed by <task, argument> for sub-policies, and terminal
frames for the answering head.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..world.layout import HouseLayout
from ..world.observe import FeatureConfig, FeatureExtractor
from ..world.questions import Question, generate_question
from ..world.sim import Action, AgentState, free_room_cells, geodesic_distance
from ..world import io as world_io
from .lifting import AnnotatedPlan, PlanError, SegmentInfo, lift_trajectory
from .shortest_path import DEFAULT_SUCCESS_RADIUS, ExpertTrajectory, shortest_path
from .subgoals import Subgoal, SubgoalSpace, Task

CORPUS_FORMAT_VERSION = 1


class CorpusError(ValueError):
    pass


@dataclass
class PlanRecord:
    house_uid: str
    question: Question
    trajectory: ExpertTrajectory
    plan: AnnotatedPlan
    features: np.ndarray = field(repr=False)  # (T+1, D) observation per state

    @property
    def spawn(self) -> AgentState:
        return self.trajectory.states[0]


@dataclass
class PlanCorpus:
    records: list[PlanRecord]
    feature_dim: int
    q_dim: int
    n_room_types: int
    n_object_types: int
    n_colors: int
    radius: int = DEFAULT_SUCCESS_RADIUS

    @property
    def subgoal_space(self) -> SubgoalSpace:
        return SubgoalSpace(self.n_room_types, self.n_object_types)

    def n_plans(self) -> int:
        return len(self.records)

    def n_segments(self) -> int:
        return sum(len(rec.plan.segments) for rec in self.records)

    def master_samples(self, record: PlanRecord):
        """(feature, prev_subgoal_index, next_subgoal_index) per master decision."""
        space = self.subgoal_space
        prev = space.start_token
        out = []
        for seg in record.plan.segments:
            out.append((record.features[seg.start], prev, space.index(seg.subgoal)))
            prev = space.index(seg.subgoal)
        return out

    def segment_steps(self, record: PlanRecord, seg: SegmentInfo):
        """(feature, prev_action_index, action_label) per sub-policy decision.

        The label sequence is the expert's actions followed by stop at the
        segment's final state; the previous-action input is teacher forced.
        """
        prev = PREV_ACTION_START
        out = []
        for t in range(seg.start, seg.end):
            out.append((record.features[t], prev, record.trajectory.actions[t]))
            prev = record.trajectory.actions[t]
        out.append((record.features[seg.end], prev, int(Action.STOP)))
        return out

    def motion_segments(self, task: Task | None = None):
        for rec in self.records:
            for seg in rec.plan.motion_segments():
                if task is None or seg.subgoal.task == task:
                    yield rec, seg

    def answer_frames(self, record: PlanRecord, window: int = 5) -> np.ndarray:
        return record.features[-min(window, len(record.features)):]


PREV_ACTION_START = 4  # follows forward/turn-left/turn-right/stop in the embedding


def build_dataset(houses: list[HouseLayout], questions_per_house: int, seed: int, *,
                  feature_config: FeatureConfig = FeatureConfig(),
                  q_dim: int = 32,
                  radius: int = DEFAULT_SUCCESS_RADIUS,
                  questions: dict[str, list[Question]] | None = None) -> PlanCorpus:
    """Generate questions, expert trajectories and annotated plans for `houses`.

    Pre-generated questions (keyed by house uid) may be supplied; otherwise
    they are sampled here.  Spawns are uniform over in-room free cells at
    least `radius + 1` cells from the target so no plan starts already solved.
    """
    if not houses:
        raise CorpusError("no houses supplied")
    rng = np.random.default_rng(np.random.PCG64(seed))
    records: list[PlanRecord] = []
    first = houses[0]
    for house in houses:
        extractor = FeatureExtractor(house, feature_config)
        cells = free_room_cells(house)
        for j in range(questions_per_house):
            if questions is not None:
                qlist = questions.get(house.uid, [])
                if j >= len(qlist):
                    break
                question = qlist[j]
            else:
                question = generate_question(
                    house, rng, encoding_dim=q_dim,
                    question_id=f"{house.uid}/q{j}")
            target = house.object_by_id(question.target_object_id)
            spawn = _sample_spawn(house, cells, target.cell, radius, rng)
            if spawn is None:
                continue
            traj = shortest_path(house, spawn, target.cell, radius)
            plan = lift_trajectory(house, traj, question)
            feats = np.stack([extractor.observe(house, s) for s in traj.states])
            records.append(PlanRecord(house.uid, question, traj, plan, feats))
    if not records:
        raise CorpusError("corpus is empty: no (house, question) pair produced a plan")
    return PlanCorpus(
        records=records,
        feature_dim=feature_config.dim,
        q_dim=q_dim,
        n_room_types=first.n_room_types,
        n_object_types=first.n_object_types,
        n_colors=first.n_colors,
        radius=radius,
    )


def _sample_spawn(house, cells, target_cell, radius, rng, tries: int = 64):
    headings = rng.integers(0, 4, size=tries)
    picks = rng.integers(0, len(cells), size=tries)
    for i in range(tries):
        cell = cells[int(picks[i])]
        if geodesic_distance(house, cell, target_cell) > radius:
            return AgentState(cell, int(headings[i]))
    return None


# --- persistence ----------------------------------------------------------

def record_to_dict(rec: PlanRecord) -> dict:
    return {
        "format_version": CORPUS_FORMAT_VERSION,
        "house": rec.house_uid,
        "question": world_io.question_to_dict(rec.question),
        "radius": rec.trajectory.radius,
        "target_cell": list(rec.trajectory.target_cell),
        "states": [[s.cell[0], s.cell[1], s.heading] for s in rec.trajectory.states],
        "actions": list(rec.trajectory.actions),
        "segments": [
            {
                "task": int(seg.subgoal.task),
                "argument": seg.subgoal.argument,
                "start": seg.start,
                "end": seg.end,
                "target_cell": list(seg.target_cell) if seg.target_cell else None,
                "door": seg.door_id,
                "room": seg.target_room_id,
                "object": seg.target_object_id,
                "entry_door": seg.entry_door_id,
                "start_room": seg.start_room_id,
            }
            for seg in rec.plan.segments
        ],
        "features": [list(map(float, row)) for row in rec.features],
    }


def record_from_dict(data: dict) -> PlanRecord:
    if data.get("format_version") != CORPUS_FORMAT_VERSION:
        raise CorpusError(
            f"unsupported corpus format_version {data.get('format_version')!r}")
    states = [AgentState((s[0], s[1]), s[2]) for s in data["states"]]
    traj = ExpertTrajectory(
        states=states,
        actions=list(data["actions"]),
        target_cell=tuple(data["target_cell"]),
        radius=data["radius"],
    )
    segments = [
        SegmentInfo(
            subgoal=Subgoal(Task(s["task"]), s["argument"]),
            start=s["start"],
            end=s["end"],
            target_cell=tuple(s["target_cell"]) if s["target_cell"] else None,
            door_id=s["door"],
            target_room_id=s["room"],
            target_object_id=s["object"],
            entry_door_id=s["entry_door"],
            start_room_id=s["start_room"],
        )
        for s in data["segments"]
    ]
    return PlanRecord(
        house_uid=data["house"],
        question=world_io.question_from_dict(data["question"]),
        trajectory=traj,
        plan=AnnotatedPlan(segments),
        features=np.array(data["features"], dtype=np.float64),
    )


def save_corpus(corpus: PlanCorpus, path: Path | str) -> None:
    header = {
        "format_version": CORPUS_FORMAT_VERSION,
        "kind": "plan-corpus",
        "feature_dim": corpus.feature_dim,
        "q_dim": corpus.q_dim,
        "vocab": {
            "room_types": corpus.n_room_types,
            "object_types": corpus.n_object_types,
            "colors": corpus.n_colors,
        },
        "radius": corpus.radius,
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header, sort_keys=True, separators=(",", ":")) + "\n")
        for rec in corpus.records:
            fh.write(json.dumps(record_to_dict(rec), sort_keys=True,
                                separators=(",", ":")) + "\n")


def load_corpus(path: Path | str) -> PlanCorpus:
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        if header.get("format_version") != CORPUS_FORMAT_VERSION:
            raise CorpusError(
                f"unsupported corpus format_version {header.get('format_version')!r}")
        records = [record_from_dict(json.loads(line)) for line in fh if line.strip()]
    return PlanCorpus(
        records=records,
        feature_dim=header["feature_dim"],
        q_dim=header["q_dim"],
        n_room_types=header["vocab"]["room_types"],
        n_object_types=header["vocab"]["object_types"],
        n_colors=header["vocab"]["colors"],
        radius=header["radius"],
    )
