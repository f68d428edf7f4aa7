"""Fixed name vocabularies for room types, object types and colors.

Vocabulary sizes are configurable; when a run asks for more entries than the
curated lists provide, synthetic names are appended so indices stay stable.
"""

from __future__ import annotations

ROOM_TYPE_NAMES = [
    "living",
    "kitchen",
    "bedroom",
    "bathroom",
    "dining",
    "office",
    "gym",
    "hall",
    "garage",
    "nursery",
    "patio",
    "closet",
]

OBJECT_TYPE_NAMES = [
    "sofa",
    "table",
    "fireplace",
    "bed",
    "lamp",
    "chair",
    "desk",
    "oven",
    "fridge",
    "sink",
    "piano",
    "bookshelf",
    "television",
    "rug",
    "mirror",
    "wardrobe",
    "bathtub",
    "toilet",
    "shower",
    "counter",
    "cupboard",
    "stool",
    "bench",
    "dresser",
    "nightstand",
    "plant",
    "vase",
    "clock",
    "painting",
    "curtain",
    "heater",
    "fan",
    "computer",
    "printer",
    "treadmill",
    "dumbbell",
    "cradle",
    "toybox",
    "washer",
    "dryer",
    "freezer",
    "microwave",
    "kettle",
    "couch",
    "ottoman",
    "cabinet",
    "shelf",
    "trunk",
    "hamper",
    "xbox",
]

COLOR_NAMES = [
    "red",
    "orange",
    "yellow",
    "green",
    "blue",
    "purple",
    "brown",
    "white",
]


def _extend(base: list[str], n: int, prefix: str) -> list[str]:
    if n <= len(base):
        return base[:n]
    return base + [f"{prefix}{i}" for i in range(len(base), n)]


def room_type_names(n: int) -> list[str]:
    return _extend(ROOM_TYPE_NAMES, n, "roomtype")


def object_type_names(n: int) -> list[str]:
    return _extend(OBJECT_TYPE_NAMES, n, "objtype")


def color_names(n: int) -> list[str]:
    return _extend(COLOR_NAMES, n, "color")
