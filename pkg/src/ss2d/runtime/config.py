"""Agent launch configuration."""

from __future__ import annotations

from dataclasses import dataclass

ROLES = ("player", "coach", "trainer")
WORLD_MODES = ("fullstate", "noisy")


@dataclass(frozen=True, slots=True)
class AgentConfig:
    team_name: str
    role: str = "player"
    unum_hint: int | None = None
    goalie: bool = False
    host: str = "127.0.0.1"
    player_port: int = 6000
    trainer_port: int = 6001
    coach_port: int = 6002
    mode: str = "fullstate"
    version: int = 18
    lockstep: bool = True
    log_dir: str | None = None

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        if self.mode not in WORLD_MODES:
            raise ValueError(f"mode must be one of {WORLD_MODES}")
        if self.version != 18:
            raise ValueError("protocol version is fixed at 18")
        if not self.team_name:
            raise ValueError("team_name required")

    @property
    def port(self) -> int:
        return {"player": self.player_port,
                "coach": self.coach_port,
                "trainer": self.trainer_port}[self.role]
