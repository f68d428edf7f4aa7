"""Templated color questions with deterministic encodings.

Questions ask for the color of an unambiguous target object.  When the target
type occurs in several rooms the template appends a room qualifier, and a
candidate is only eligible when the resulting phrase still has a unique
referent in the house.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .. import vocab
from .layout import HouseLayout

FUNCTION_WORDS = ["<start>", "what", "color", "is", "the", "in"]


class QuestionError(ValueError):
    """No unambiguous question target exists in the house."""


@dataclass
class Question:
    question_id: str
    tokens: list[str]
    token_ids: list[int]
    target_object_id: int
    target_room_id: int
    answer: int  # color index
    encoding: np.ndarray = field(repr=False)


class TokenVocab:
    """Stable token-to-id mapping shared by the environment and the answerer."""

    def __init__(self, n_room_types: int, n_object_types: int, n_colors: int):
        words = list(FUNCTION_WORDS)
        words += vocab.color_names(n_colors)
        words += vocab.object_type_names(n_object_types)
        words += vocab.room_type_names(n_room_types)
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}

    def __len__(self) -> int:
        return len(self.words)

    def encode(self, tokens: list[str]) -> list[int]:
        return [self.index[t] for t in tokens]


def token_embedding(token: str, dim: int) -> np.ndarray:
    """Fixed pseudo-random embedding derived from the token text alone."""
    digest = hashlib.blake2s(f"tok:{token}:{dim}".encode()).digest()
    seed = int.from_bytes(digest[:8], "little")
    rng = np.random.default_rng(np.random.PCG64(seed))
    return rng.uniform(-1.0, 1.0, size=dim)


def encode_question_tokens(tokens: list[str], dim: int) -> np.ndarray:
    total = np.zeros(dim, dtype=np.float64)
    for tok in tokens:
        total += token_embedding(tok, dim)
    return total / np.sqrt(max(len(tokens), 1))


def _question_candidates(house: HouseLayout) -> list[tuple[int, bool]]:
    """(object_id, needs room qualifier) pairs with a unique referent."""
    rooms_with_type: dict[int, set[int]] = {}
    for obj in house.objects:
        rooms_with_type.setdefault(obj.object_type, set()).add(obj.room_id)

    room_type_of = {room.room_id: room.room_type for room in house.rooms}
    out = []
    for obj in sorted(house.objects, key=lambda o: o.object_id):
        same_room = [o for o in house.objects_in_room(obj.room_id)
                     if o.object_type == obj.object_type]
        if len(same_room) != 1:
            continue  # ambiguous inside its own room
        rooms = rooms_with_type[obj.object_type]
        if len(rooms) == 1:
            out.append((obj.object_id, False))
            continue
        # qualified phrasing must still single out one room
        rtype = room_type_of[obj.room_id]
        clashes = [rid for rid in rooms if room_type_of[rid] == rtype]
        if len(clashes) == 1:
            out.append((obj.object_id, True))
    return out


def generate_question(house: HouseLayout, rng: np.random.Generator, *,
                      encoding_dim: int = 32,
                      question_id: str = "") -> Question:
    """Sample a color question whose answer field matches the target's color."""
    candidates = _question_candidates(house)
    if not candidates:
        raise QuestionError(f"house {house.uid} has no unambiguous question target")
    object_id, qualified = candidates[int(rng.integers(len(candidates)))]
    obj = house.object_by_id(object_id)
    type_name = vocab.object_type_names(house.n_object_types)[obj.object_type]
    tokens = ["what", "color", "is", "the", type_name]
    if qualified:
        room_type = house.rooms[obj.room_id].room_type
        room_name = vocab.room_type_names(house.n_room_types)[room_type]
        tokens += ["in", "the", room_name]
    tvocab = TokenVocab(house.n_room_types, house.n_object_types, house.n_colors)
    return Question(
        question_id=question_id or f"{house.uid}/q-{object_id}",
        tokens=tokens,
        token_ids=tvocab.encode(tokens),
        target_object_id=object_id,
        target_room_id=obj.room_id,
        answer=obj.color,
        encoding=encode_question_tokens(tokens, encoding_dim),
    )
