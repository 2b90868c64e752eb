"""Per-agent text logging.

Line format: "<cycle> <LEVEL> <category> <message>".  A world snapshot
is a regular line with category "snapshot" whose message is space
separated key=value pairs; floats are written with repr so the shipped
parser reads back the identical values.
"""

from __future__ import annotations

import os
import re
import sys
from typing import Any, Mapping

LEVELS = {"DEBUG": 10, "INFO": 20, "WARN": 30, "ERROR": 40}
DEFAULT_FLUSH_CYCLES = 50

_KEY_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_./]*\Z")


def env_level() -> str:
    name = os.environ.get("SS2D_LOG_LEVEL", "INFO").upper()
    return name if name in LEVELS else "INFO"


class AgentLogger:
    def __init__(self, path: str | None, level: str | None = None,
                 flush_cycles: int = DEFAULT_FLUSH_CYCLES):
        self.level = LEVELS[level if level is not None else env_level()]
        self.flush_cycles = flush_cycles
        self.disabled = path is None
        self._fh = None
        self._last_flush_cycle = 0
        self._notice_given = False
        if path is not None:
            try:
                self._fh = open(path, "w")
            except OSError as exc:
                self._disable(exc)

    def _disable(self, exc: Exception) -> None:
        self.disabled = True
        if not self._notice_given:
            self._notice_given = True
            sys.stderr.write(f"ss2d: logging disabled ({exc})\n")
        if self._fh is not None:
            try:
                self._fh.close()
            except OSError:
                pass
            self._fh = None

    def log(self, cycle: int, level: str, category: str, message: str) -> None:
        if self.disabled or LEVELS.get(level, 0) < self.level:
            return
        message = message.replace("\n", " ").replace("\r", " ")
        try:
            self._fh.write(f"{cycle} {level} {category} {message}\n")
            if cycle - self._last_flush_cycle >= self.flush_cycles:
                self._fh.flush()
                self._last_flush_cycle = cycle
        except OSError as exc:
            self._disable(exc)

    def snapshot(self, cycle: int, values: Mapping[str, Any]) -> None:
        pairs = []
        for key, value in values.items():
            if not _KEY_RE.match(key):
                raise ValueError(f"bad snapshot key {key!r}")
            if isinstance(value, float):
                pairs.append(f"{key}={value!r}")
            else:
                pairs.append(f"{key}={value}")
        self.log(cycle, "INFO", "snapshot", " ".join(pairs))

    def flush(self) -> None:
        if self._fh is not None:
            try:
                self._fh.flush()
            except OSError as exc:
                self._disable(exc)

    def close(self) -> None:
        if self._fh is not None:
            try:
                self._fh.flush()
                self._fh.close()
            except OSError:
                pass
            self._fh = None
        self.disabled = True


def parse_snapshot_line(line: str) -> tuple[int, dict[str, Any]]:
    """Inverse of AgentLogger.snapshot, shipped for tests and tooling."""
    fields = line.rstrip("\n").split(" ")
    if len(fields) < 3 or fields[1] != "INFO" or fields[2] != "snapshot":
        raise ValueError(f"not a snapshot line: {line!r}")
    cycle = int(fields[0])
    values: dict[str, Any] = {}
    for pair in fields[3:]:
        if not pair:
            continue
        key, _, raw = pair.partition("=")
        try:
            values[key] = int(raw)
        except ValueError:
            try:
                values[key] = float(raw)
            except ValueError:
                values[key] = raw
    return cycle, values


def world_snapshot(world) -> dict[str, Any]:
    """Standard per-cycle snapshot of a WorldModel."""
    me = world.self_state
    snap: dict[str, Any] = {
        "mode": world.play_mode,
        "x": float(me.position.x),
        "y": float(me.position.y),
        "vx": float(me.velocity.x),
        "vy": float(me.velocity.y),
        "body": float(me.body_direction),
        "conf": float(me.position_confidence),
        "stamina": float(me.stamina),
        "ball_known": int(world.ball.is_known),
    }
    if world.ball.is_known:
        snap["ball_x"] = float(world.ball.position.x)
        snap["ball_y"] = float(world.ball.position.y)
        snap["ball_vx"] = float(world.ball.velocity.x)
        snap["ball_vy"] = float(world.ball.velocity.y)
    return snap
