"""Belief state: localization, object tracking, ball prediction, intercept."""

from .landmarks import landmark_table, line_table
from .localize import (
    face_from_flags,
    face_from_line,
    fold_line_angle,
    globalize_position,
    globalize_velocity,
    line_relative_dir,
    localize_self,
)
from .model import WorldModel, other_side, update
from .predict import (
    DEFAULT_HORIZON,
    NoBallError,
    ball_path,
    build_intercept_table,
    min_cycles_to_intercept,
    predict_ball,
)
from .state import (
    AGING_FACTOR,
    STALENESS_BOUND,
    UNKNOWN_ASSOC_RADIUS,
    InterceptTable,
    ObjectTrack,
    SelfState,
    argmin_unum,
)

__all__ = [
    "AGING_FACTOR",
    "DEFAULT_HORIZON",
    "InterceptTable",
    "NoBallError",
    "ObjectTrack",
    "STALENESS_BOUND",
    "SelfState",
    "UNKNOWN_ASSOC_RADIUS",
    "WorldModel",
    "argmin_unum",
    "ball_path",
    "build_intercept_table",
    "face_from_flags",
    "face_from_line",
    "fold_line_angle",
    "globalize_position",
    "globalize_velocity",
    "landmark_table",
    "line_relative_dir",
    "line_table",
    "localize_self",
    "min_cycles_to_intercept",
    "other_side",
    "predict_ball",
    "update",
]
