"""Message and command value types for the wire protocol.

Inbound traffic parses into one of the SensorMessage variants below;
outbound traffic is built from Command values.  Both sides are plain
immutable records with no behavior of their own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

MAX_MESSAGE_BYTES = 8192

PLAY_MODES = (
    "before_kick_off",
    "kick_off_l",
    "kick_off_r",
    "play_on",
    "goal_l",
    "goal_r",
    "kick_in_l",
    "kick_in_r",
    "time_over",
)

VIEW_WIDTHS = ("narrow", "normal", "wide")


@dataclass(frozen=True, slots=True)
class RawMessage:
    """One datagram as received: NUL-terminated ASCII, at most 8 KiB."""

    text: bytes
    receive_time: float = 0.0


@dataclass(frozen=True, slots=True)
class SeenObject:
    """One item of a see message.

    kind is one of flag/goal/ball/player/line/unknown; ident is the
    space-joined object name for landmark kinds ("f c t", "g l", "l r").
    A far object may carry a direction without a distance; whenever a
    distance is present the direction is present too.
    """

    kind: str
    ident: str | None = None
    team: str | None = None
    unum: int | None = None
    goalie: bool = False
    distance: float | None = None
    direction: float | None = None
    dist_change: float | None = None
    dir_change: float | None = None
    body_dir: float | None = None
    head_dir: float | None = None


@dataclass(frozen=True)
class BodyState:
    """Contents of a sense_body message."""

    stamina: float = 0.0
    effort: float = 1.0
    recovery: float = 1.0
    speed_magnitude: float = 0.0
    speed_direction: float = 0.0
    neck_direction: float = 0.0
    view_quality: str = "high"
    view_width: str = "normal"
    counts: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class FullStatePlayer:
    side: str
    unum: int
    type_id: int
    x: float
    y: float
    vx: float
    vy: float
    body_dir: float
    neck_dir: float
    stamina: float | None = None


# --- sensor message variants -------------------------------------------------

@dataclass(frozen=True, slots=True)
class InitMsg:
    side: str | None = None
    unum: int | None = None
    playmode: str | None = None
    ok: bool = False


@dataclass(frozen=True, slots=True)
class SeeMsg:
    time: int
    objects: tuple[SeenObject, ...]


@dataclass(frozen=True, slots=True)
class SenseBodyMsg:
    time: int
    body: BodyState


@dataclass(frozen=True, slots=True)
class HearMsg:
    time: int
    sender: str | float
    message: str


@dataclass(frozen=True, slots=True)
class PlayModeChangeMsg:
    """A referee announcement naming one of the known play modes."""

    time: int
    mode: str


@dataclass(frozen=True, slots=True)
class FullStateMsg:
    time: int
    playmode: str
    ball: tuple[float, float, float, float]
    players: tuple[FullStatePlayer, ...]
    score: tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class ServerParamMsg:
    params: dict[str, float | str]


@dataclass(frozen=True)
class PlayerParamMsg:
    params: dict[str, float | str]


@dataclass(frozen=True)
class PlayerTypeMsg:
    type_id: int
    params: dict[str, float | str]


@dataclass(frozen=True, slots=True)
class ErrorMsg:
    text: str


@dataclass(frozen=True, slots=True)
class UnknownMsg:
    raw: bytes


SensorMessage = Union[
    InitMsg,
    SeeMsg,
    SenseBodyMsg,
    HearMsg,
    PlayModeChangeMsg,
    FullStateMsg,
    ServerParamMsg,
    PlayerParamMsg,
    PlayerTypeMsg,
    ErrorMsg,
    UnknownMsg,
]


# --- outbound commands -------------------------------------------------------

class CommandError(ValueError):
    """A command value violates its invariants."""


@dataclass(frozen=True, slots=True)
class Dash:
    power: float
    direction: float = 0.0


@dataclass(frozen=True, slots=True)
class Turn:
    moment: float


@dataclass(frozen=True, slots=True)
class Kick:
    power: float
    direction: float


@dataclass(frozen=True, slots=True)
class Move:
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class TurnNeck:
    moment: float


@dataclass(frozen=True, slots=True)
class Say:
    text: str


@dataclass(frozen=True, slots=True)
class Catch:
    direction: float


@dataclass(frozen=True, slots=True)
class ChangeView:
    width: str


@dataclass(frozen=True, slots=True)
class InitCommand:
    team_name: str
    version: int = 18
    goalie: bool = False


@dataclass(frozen=True, slots=True)
class Bye:
    pass


@dataclass(frozen=True, slots=True)
class ChangeMode:
    """Trainer only: force the play mode."""

    mode: str


@dataclass(frozen=True, slots=True)
class MoveBall:
    """Trainer only: teleport the ball, optionally setting its velocity."""

    x: float
    y: float
    vx: float | None = None
    vy: float | None = None


@dataclass(frozen=True, slots=True)
class MovePlayer:
    """Trainer only: teleport a player."""

    team: str
    unum: int
    x: float
    y: float
    body_dir: float | None = None


@dataclass(frozen=True, slots=True)
class Done:
    """Lockstep sync marker: 'my commands for this cycle are complete'."""


Command = Union[
    Dash, Turn, Kick, Move, TurnNeck, Say, Catch, ChangeView,
    InitCommand, Bye, ChangeMode, MoveBall, MovePlayer, Done,
]

BODY_COMMANDS = (Dash, Turn, Kick, Move, Catch)
TRAINER_COMMANDS = (ChangeMode, MoveBall, MovePlayer)


def is_body_command(command: Command) -> bool:
    return isinstance(command, BODY_COMMANDS)
