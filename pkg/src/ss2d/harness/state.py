"""Ground-truth match state owned by the harness."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..geom import Vector2D
from ..params import ServerParamSet
from ..protocol import PLAY_MODES

LEFT_SLOTS = range(0, 11)
RIGHT_SLOTS = range(11, 22)

DEAD_BALL_MODES = ("before_kick_off", "kick_off_l", "kick_off_r",
                   "goal_l", "goal_r", "kick_in_l", "kick_in_r")

# cycles a restart mode may idle before the referee forces play_on
RESTART_RELEASE_CYCLES = 50
GOAL_PAUSE_CYCLES = 5


def slot_index(side: str, unum: int) -> int:
    if side not in ("l", "r") or not 1 <= unum <= 11:
        raise ValueError(f"no slot for side={side!r} unum={unum}")
    return (0 if side == "l" else 11) + unum - 1


def slot_identity(index: int) -> tuple[str, int]:
    if not 0 <= index < 22:
        raise ValueError(f"slot index out of range: {index}")
    return ("l", index + 1) if index < 11 else ("r", index - 10)


@dataclass(slots=True)
class Ball:
    position: Vector2D = Vector2D(0.0, 0.0)
    velocity: Vector2D = Vector2D(0.0, 0.0)


@dataclass(slots=True)
class PlayerSlot:
    side: str
    unum: int
    position: Vector2D
    velocity: Vector2D = Vector2D(0.0, 0.0)
    body_dir: float = 0.0
    neck_dir: float = 0.0
    stamina: float = 8000.0
    connected: bool = False
    goalie: bool = False
    team_name: str = ""
    view_width: str = "normal"


@dataclass(slots=True)
class MatchState:
    params: ServerParamSet
    cycle: int = 0
    play_mode: str = "before_kick_off"
    ball: Ball = field(default_factory=Ball)
    players: list[PlayerSlot] = field(default_factory=list)
    score_l: int = 0
    score_r: int = 0
    rng: random.Random = field(default_factory=random.Random)
    counters: dict[str, int] = field(default_factory=dict)
    last_kicker_side: str | None = None
    mode_age: int = 0

    def count(self, key: str, n: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + n

    def set_mode(self, mode: str) -> None:
        if mode not in PLAY_MODES:
            raise ValueError(f"unknown play mode {mode!r}")
        self.play_mode = mode
        self.mode_age = 0


def new_match_state(params: ServerParamSet, seed: int = 0) -> MatchState:
    players = []
    for index in range(22):
        side, unum = slot_identity(index)
        # default lineup: each team lined up on its own half, facing the
        # opponent goal, until agents move themselves into formation
        x = -10.0 if side == "l" else 10.0
        y = 4.0 * unum - 24.0
        players.append(PlayerSlot(
            side=side, unum=unum,
            position=Vector2D(x, y),
            body_dir=0.0 if side == "l" else 180.0,
            stamina=params.stamina_max,
        ))
    state = MatchState(params=params, players=players, rng=random.Random(seed))
    return state
