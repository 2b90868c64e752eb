"""Sample decision making: enough play to exercise the whole stack."""

from .formation import (
    FORMATION_433,
    home_position,
    load_formation,
    save_formation,
)
from .outcome import BehaviorOutcome
from .sample import (
    HOME_DASH_POWER,
    HOME_RADIUS,
    SCAN_TURN_DEG,
    TURN_THRESHOLD_DEG,
    decide_idle,
    decide_sample,
    may_kick,
    opponent_goal,
)

__all__ = [
    "BehaviorOutcome",
    "FORMATION_433",
    "HOME_DASH_POWER",
    "HOME_RADIUS",
    "SCAN_TURN_DEG",
    "TURN_THRESHOLD_DEG",
    "decide_idle",
    "decide_sample",
    "home_position",
    "load_formation",
    "may_kick",
    "opponent_goal",
    "save_formation",
]
