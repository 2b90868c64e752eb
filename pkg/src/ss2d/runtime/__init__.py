"""Agent life cycle: sessions, timer, decision loop, sharing, logging."""

from .config import ROLES, WORLD_MODES, AgentConfig
from .logger import (
    DEFAULT_FLUSH_CYCLES,
    LEVELS,
    AgentLogger,
    env_level,
    parse_snapshot_line,
    world_snapshot,
)
from .loop import ExitReport, connect_and_run, run_match_loop
from .roles import BudgetError, command_summary, drop_body, validate_outcome
from .session import ConnectError, HandshakeError, Session
from .share import ShareChannel, ShareEntry
from .timer import SynchronousTimer, Tick

__all__ = [
    "AgentConfig",
    "AgentLogger",
    "BudgetError",
    "ConnectError",
    "DEFAULT_FLUSH_CYCLES",
    "ExitReport",
    "HandshakeError",
    "LEVELS",
    "ROLES",
    "Session",
    "ShareChannel",
    "ShareEntry",
    "SynchronousTimer",
    "Tick",
    "WORLD_MODES",
    "command_summary",
    "connect_and_run",
    "drop_body",
    "env_level",
    "parse_snapshot_line",
    "run_match_loop",
    "validate_outcome",
    "world_snapshot",
]
