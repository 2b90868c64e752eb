"""Typed parameter sets and merge semantics.

ServerParamSet carries the constants the world model and the harness
actually consume as typed fields; every other name rides in an extras
map so a future server can hand us keys we have never heard of without
breaking the handshake.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, replace
from typing import Mapping

from .constants import EXTRA_DEFAULTS, INTEGER_FIELDS, SERVER_DEFAULTS

log = logging.getLogger("ss2d.params")

ParamValue = "float | int | str"


@dataclass(frozen=True)
class ServerParamSet:
    ball_decay: float
    ball_speed_max: float
    player_decay: float
    player_speed_max: float
    dash_power_rate: float
    kick_power_rate: float
    kickable_margin: float
    player_size: float
    ball_size: float
    catchable_area_l: float
    catchable_area_w: float
    stamina_max: float
    stamina_inc_max: float
    half_time_cycles: int
    simulator_step_ms: int
    visible_angle: float
    quantize_step: float
    goal_width: float
    pitch_length: float
    pitch_width: float
    player_port: int
    trainer_port: int
    coach_port: int
    extras: dict[str, float | str] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("ball_decay", "player_decay"):
            value = getattr(self, name)
            if not 0 < value < 1:
                raise ValueError(f"{name} must be in (0, 1), got {value}")
        for name in ("player_size", "ball_size", "kickable_margin",
                     "pitch_length", "pitch_width", "goal_width",
                     "quantize_step"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")

    # frequently used derived quantities
    @property
    def kickable_area(self) -> float:
        return self.player_size + self.ball_size + self.kickable_margin

    @property
    def pitch_half_length(self) -> float:
        return self.pitch_length / 2

    @property
    def pitch_half_width(self) -> float:
        return self.pitch_width / 2

    def get(self, name: str, default: float | str | None = None) -> float | str | None:
        """Uniform lookup across typed fields and the extras map."""
        if name != "extras" and name in _TYPED_FIELDS:
            return getattr(self, name)
        return self.extras.get(name, default)

    def merge(self, overrides: Mapping[str, float | str]) -> "ServerParamSet":
        """New set with overrides applied; unknown keys go to extras."""
        typed: dict = {}
        extras = dict(self.extras)
        for key, value in overrides.items():
            if key == "extras":
                raise ValueError("'extras' is not an overridable key")
            if key in _TYPED_FIELDS:
                typed[key] = _coerce(key, value)
            else:
                if key not in extras and key not in EXTRA_DEFAULTS:
                    log.warning("unknown parameter %r kept in extras", key)
                extras[key] = value
        return replace(self, extras=extras, **typed)

    def as_mapping(self) -> dict[str, float | str]:
        """Flat name->value view, typed fields first, extras after."""
        out: dict[str, float | str] = {
            name: getattr(self, name) for name in _TYPED_FIELDS
        }
        out.update(self.extras)
        return out

    def serialize(self) -> str:
        """Handshake form: (server_param (name value)*), sorted for determinism."""
        parts = []
        for key in sorted(self.as_mapping()):
            parts.append(f"({key} {format_param(self.as_mapping()[key])})")
        return "(server_param " + "".join(parts) + ")" if parts else "(server_param)"


_TYPED_FIELDS = tuple(f.name for f in fields(ServerParamSet) if f.name != "extras")


def _coerce(key: str, value: float | str):
    if key in INTEGER_FIELDS:
        return int(float(value))
    if isinstance(value, str):
        return float(value)
    return float(value)


def format_param(value: float | str) -> str:
    """Full-fidelity rendering for the handshake (repr round-trips)."""
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(value, int) or value == int(value):
        return str(int(value))
    return repr(float(value))


def defaults() -> ServerParamSet:
    """The artifact's canonical default set."""
    return ServerParamSet(extras=dict(EXTRA_DEFAULTS), **SERVER_DEFAULTS)


@dataclass(frozen=True)
class PlayerType:
    """One heterogeneous player type; unset knobs inherit server values."""

    type_id: int
    player_speed_max: float
    stamina_inc_max: float
    player_decay: float
    kickable_margin: float
    dash_power_rate: float
    player_size: float
    extras: dict[str, float | str] = field(default_factory=dict)

    def kickable_area(self, ball_size: float) -> float:
        return self.player_size + ball_size + self.kickable_margin


@dataclass(frozen=True)
class PlayerTypeSet:
    types: tuple[PlayerType, ...]

    def __post_init__(self):
        ids = [t.type_id for t in self.types]
        if ids != list(range(len(ids))):
            raise ValueError(f"player type ids must be dense from 0, got {ids}")

    def get(self, type_id: int) -> PlayerType:
        return self.types[type_id]

    @property
    def default(self) -> PlayerType:
        return self.types[0]


def default_player_types(server: ServerParamSet, count: int = 1) -> PlayerTypeSet:
    """Homogeneous set: every type mirrors the server values (type 0 rule)."""
    base = PlayerType(
        type_id=0,
        player_speed_max=server.player_speed_max,
        stamina_inc_max=server.stamina_inc_max,
        player_decay=server.player_decay,
        kickable_margin=server.kickable_margin,
        dash_power_rate=server.dash_power_rate,
        player_size=server.player_size,
    )
    return PlayerTypeSet(tuple(replace(base, type_id=i) for i in range(count)))


def player_types_from_params(server: ServerParamSet,
                             blocks: Mapping[int, Mapping[str, float | str]]) -> PlayerTypeSet:
    """Build the type table from parsed (player_type ...) blocks."""
    types = []
    for type_id in range(len(blocks)):
        if type_id not in blocks:
            raise ValueError(f"player type ids must be dense from 0, missing {type_id}")
        block = dict(blocks[type_id])
        known = {}
        for name in ("player_speed_max", "stamina_inc_max", "player_decay",
                     "kickable_margin", "dash_power_rate", "player_size"):
            if name in block:
                known[name] = float(block.pop(name))
            else:
                known[name] = float(getattr(server, name))
        types.append(PlayerType(type_id=type_id, extras=block, **known))
    return PlayerTypeSet(tuple(types))
