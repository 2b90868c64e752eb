"""Simulation constants: defaults, handshake parsing, config overrides."""

from .constants import EXTRA_DEFAULTS, INTEGER_FIELDS, SERVER_DEFAULTS
from .config import apply_overrides, load_config, parse_override
from .sets import (
    PlayerType,
    PlayerTypeSet,
    ServerParamSet,
    default_player_types,
    defaults,
    format_param,
    player_types_from_params,
)

__all__ = [
    "EXTRA_DEFAULTS",
    "INTEGER_FIELDS",
    "PlayerType",
    "PlayerTypeSet",
    "SERVER_DEFAULTS",
    "ServerParamSet",
    "apply_overrides",
    "default_player_types",
    "defaults",
    "format_param",
    "load_config",
    "parse_override",
    "player_types_from_params",
]
