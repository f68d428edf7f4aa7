from .layout import DOOR, FREE, WALL, Doorway, HouseLayout, LayoutError, Room, WorldObject, door_exit_cell, validate_layout
from .generate import GenConfig, GenerationError, generate_house
from .sim import (
    ACTION_NAMES,
    HEADING_NAMES,
    MOTION_ACTIONS,
    Action,
    AgentState,
    Heading,
    UnreachableError,
    distance_field,
    forward_cell,
    free_room_cells,
    geodesic_distance,
    step,
    turn_left,
    turn_right,
)
from .observe import FeatureConfig, FeatureConfigError, FeatureExtractor, min_feature_dim
from .questions import Question, QuestionError, TokenVocab, encode_question_tokens, generate_question
from .visibility import visible_cone_cells
from . import io

__all__ = [
    "ACTION_NAMES",
    "Action",
    "AgentState",
    "DOOR",
    "Doorway",
    "FREE",
    "FeatureConfig",
    "FeatureConfigError",
    "FeatureExtractor",
    "GenConfig",
    "GenerationError",
    "HEADING_NAMES",
    "Heading",
    "HouseLayout",
    "LayoutError",
    "MOTION_ACTIONS",
    "Question",
    "QuestionError",
    "Room",
    "TokenVocab",
    "UnreachableError",
    "WALL",
    "WorldObject",
    "distance_field",
    "door_exit_cell",
    "encode_question_tokens",
    "forward_cell",
    "free_room_cells",
    "generate_house",
    "generate_question",
    "geodesic_distance",
    "io",
    "min_feature_dim",
    "step",
    "turn_left",
    "turn_right",
    "validate_layout",
    "visible_cone_cells",
]
