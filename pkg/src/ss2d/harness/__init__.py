"""Deterministic embedded mini-server speaking the rcss wire grammar."""

from .noise import (
    NoiseModel,
    quantize_dir,
    quantize_dist,
    quantize_dist_landmark,
    quantize_dist_movable,
    round_to,
)
from .observe import (
    build_fullstate,
    build_see,
    build_sense_body,
    motion_changes,
    relative_polar,
)
from .server import (
    ERROR_NO_MORE,
    AgentConn,
    HarnessConfig,
    HarnessServer,
    match_log_line,
    run_headless,
)
from .state import (
    DEAD_BALL_MODES,
    GOAL_PAUSE_CYCLES,
    RESTART_RELEASE_CYCLES,
    Ball,
    MatchState,
    PlayerSlot,
    new_match_state,
    slot_identity,
    slot_index,
)
from .step import (
    PROTOCOL_VIOLATION_KEYS,
    TRAINER_SLOT,
    protocol_violations,
    restart_side,
    step,
)

__all__ = [
    "AgentConn",
    "Ball",
    "DEAD_BALL_MODES",
    "ERROR_NO_MORE",
    "GOAL_PAUSE_CYCLES",
    "HarnessConfig",
    "HarnessServer",
    "MatchState",
    "NoiseModel",
    "PROTOCOL_VIOLATION_KEYS",
    "PlayerSlot",
    "RESTART_RELEASE_CYCLES",
    "TRAINER_SLOT",
    "build_fullstate",
    "build_see",
    "build_sense_body",
    "match_log_line",
    "motion_changes",
    "new_match_state",
    "protocol_violations",
    "quantize_dir",
    "quantize_dist",
    "quantize_dist_landmark",
    "quantize_dist_movable",
    "relative_polar",
    "restart_side",
    "round_to",
    "run_headless",
    "slot_identity",
    "slot_index",
    "step",
]
