"""Versioned JSON serialization for houses and their questions.

Grid rows are run-length encoded as count+kind tokens ("3W7F1D...").  Output
is byte-stable: sorted keys, fixed separators, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .layout import CHAR_KINDS, KIND_CHARS, Doorway, HouseLayout, Room, WorldObject, validate_layout
from .questions import Question, encode_question_tokens

FORMAT_VERSION = 1


class FormatError(ValueError):
    pass


def _rle_row(row: np.ndarray) -> str:
    parts = []
    run_char = KIND_CHARS[int(row[0])]
    run_len = 1
    for kind in row[1:]:
        ch = KIND_CHARS[int(kind)]
        if ch == run_char:
            run_len += 1
        else:
            parts.append(f"{run_len}{run_char}")
            run_char, run_len = ch, 1
    parts.append(f"{run_len}{run_char}")
    return "".join(parts)


def _unrle_row(text: str, width: int) -> list[int]:
    out: list[int] = []
    count = ""
    for ch in text:
        if ch.isdigit():
            count += ch
        else:
            if not count or ch not in CHAR_KINDS:
                raise FormatError(f"bad RLE token near {ch!r}")
            out.extend([CHAR_KINDS[ch]] * int(count))
            count = ""
    if count or len(out) != width:
        raise FormatError(f"RLE row decodes to {len(out)} cells, expected {width}")
    return out


def house_to_dict(house: HouseLayout, questions: list[Question] | None = None) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "uid": house.uid,
        "vocab": {
            "room_types": house.n_room_types,
            "object_types": house.n_object_types,
            "colors": house.n_colors,
        },
        "grid": {
            "height": house.height,
            "width": house.width,
            "rows": [_rle_row(house.grid[r]) for r in range(house.height)],
        },
        "rooms": [
            {"id": r.room_id, "type": r.room_type, "extent": [r.r0, r.c0, r.r1, r.c1]}
            for r in house.rooms
        ],
        "doorways": [
            {"id": d.door_id, "cell": list(d.cell), "rooms": [d.room_a, d.room_b]}
            for d in house.doorways
        ],
        "objects": [
            {"id": o.object_id, "type": o.object_type, "color": o.color,
             "cell": list(o.cell), "room": o.room_id}
            for o in house.objects
        ],
        "questions": [question_to_dict(q) for q in (questions or [])],
    }


def house_from_dict(data: dict) -> tuple[HouseLayout, list[Question]]:
    if data.get("format_version") != FORMAT_VERSION:
        raise FormatError(
            f"unsupported house format_version {data.get('format_version')!r}, "
            f"expected {FORMAT_VERSION}"
        )
    g = data["grid"]
    grid = np.array([_unrle_row(row, g["width"]) for row in g["rows"]], dtype=np.int8)
    if grid.shape != (g["height"], g["width"]):
        raise FormatError("grid shape mismatch")
    house = HouseLayout(
        uid=data["uid"],
        grid=grid,
        rooms=[Room(room_id=r["id"], room_type=r["type"],
                    r0=r["extent"][0], c0=r["extent"][1],
                    r1=r["extent"][2], c1=r["extent"][3]) for r in data["rooms"]],
        doorways=[Doorway(door_id=d["id"], cell=tuple(d["cell"]),
                          room_a=d["rooms"][0], room_b=d["rooms"][1])
                  for d in data["doorways"]],
        objects=[WorldObject(object_id=o["id"], object_type=o["type"], color=o["color"],
                             cell=tuple(o["cell"]), room_id=o["room"])
                 for o in data["objects"]],
        n_room_types=data["vocab"]["room_types"],
        n_object_types=data["vocab"]["object_types"],
        n_colors=data["vocab"]["colors"],
    )
    validate_layout(house)
    questions = [question_from_dict(q) for q in data.get("questions", [])]
    return house, questions


def question_to_dict(q: Question) -> dict:
    return {
        "id": q.question_id,
        "tokens": q.tokens,
        "token_ids": q.token_ids,
        "target_object": q.target_object_id,
        "target_room": q.target_room_id,
        "answer": q.answer,
        "encoding_dim": int(q.encoding.shape[0]),
    }


def question_from_dict(data: dict) -> Question:
    return Question(
        question_id=data["id"],
        tokens=list(data["tokens"]),
        token_ids=list(data["token_ids"]),
        target_object_id=data["target_object"],
        target_room_id=data["target_room"],
        answer=data["answer"],
        encoding=encode_question_tokens(list(data["tokens"]), data["encoding_dim"]),
    )


def dump_json(data: dict, path: Path | str) -> None:
    text = json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def save_house(house: HouseLayout, path: Path | str,
               questions: list[Question] | None = None) -> None:
    dump_json(house_to_dict(house, questions), path)


def load_house(path: Path | str) -> tuple[HouseLayout, list[Question]]:
    return house_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
