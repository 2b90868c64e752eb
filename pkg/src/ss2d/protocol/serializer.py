"""Command validation and serialization.

serialize_command validates first and raises CommandError on a bad
value, so malformed commands never reach the wire.  Reals are rendered
with at most four decimal places, which round-trips exactly on the
command domain (server-side precision is far coarser).
"""

from __future__ import annotations

import math

from .messages import (
    Bye,
    Catch,
    ChangeMode,
    ChangeView,
    Command,
    CommandError,
    Dash,
    Done,
    InitCommand,
    Kick,
    Move,
    MoveBall,
    MovePlayer,
    PLAY_MODES,
    Say,
    Turn,
    TurnNeck,
    VIEW_WIDTHS,
)

# say payloads and team names must stay single atoms / clean strings
_SAY_BAD = set("\n\r\x00")
_TEAM_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-.")


def format_real(value: float) -> str:
    """Shortest decimal with at most 4 places; integers drop the point."""
    if not math.isfinite(value):
        raise CommandError(f"non-finite value {value!r}")
    if value == int(value):
        return str(int(value))
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    if text in ("-0", "", "-"):
        return "0"
    return text


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise CommandError(message)


def _finite(value: float, name: str) -> float:
    _check(isinstance(value, (int, float)) and math.isfinite(value),
           f"{name} must be a finite number")
    return float(value)


def _in_range(value: float, lo: float, hi: float, name: str) -> float:
    value = _finite(value, name)
    _check(lo <= value <= hi, f"{name} {value} outside [{lo}, {hi}]")
    return value


def validate_command(command: Command) -> None:
    """Raise CommandError when a command violates its invariants."""
    if isinstance(command, Dash):
        _in_range(command.power, -100, 100, "dash power")
        _in_range(command.direction, -180, 180, "dash direction")
    elif isinstance(command, Turn):
        _in_range(command.moment, -180, 180, "turn moment")
    elif isinstance(command, Kick):
        _in_range(command.power, 0, 100, "kick power")
        _in_range(command.direction, -180, 180, "kick direction")
    elif isinstance(command, Move):
        _finite(command.x, "move x")
        _finite(command.y, "move y")
    elif isinstance(command, TurnNeck):
        _in_range(command.moment, -180, 180, "turn_neck moment")
    elif isinstance(command, Say):
        _check(isinstance(command.text, str) and command.text != "",
               "say text must be a nonempty string")
        _check(not (_SAY_BAD & set(command.text)), "say text contains control bytes")
        _check(command.text.isascii(), "say text must be ASCII")
    elif isinstance(command, Catch):
        _in_range(command.direction, -180, 180, "catch direction")
    elif isinstance(command, ChangeView):
        _check(command.width in VIEW_WIDTHS,
               f"view width {command.width!r} not one of {VIEW_WIDTHS}")
    elif isinstance(command, InitCommand):
        name = command.team_name
        _check(isinstance(name, str) and 0 < len(name) <= 32,
               "team name must be 1..32 chars")
        _check(set(name) <= _TEAM_OK, f"team name {name!r} has unsafe characters")
        _check(isinstance(command.version, int) and command.version > 0,
               "version must be a positive integer")
    elif isinstance(command, ChangeMode):
        _check(command.mode in PLAY_MODES, f"unknown play mode {command.mode!r}")
    elif isinstance(command, MoveBall):
        _finite(command.x, "x")
        _finite(command.y, "y")
        _check((command.vx is None) == (command.vy is None),
               "ball velocity needs both components or neither")
        if command.vx is not None:
            _finite(command.vx, "vx")
            _finite(command.vy, "vy")
    elif isinstance(command, MovePlayer):
        _check(isinstance(command.unum, int) and 1 <= command.unum <= 11,
               f"uniform number {command.unum} out of range")
        _check(set(command.team) <= _TEAM_OK and command.team != "",
               f"team name {command.team!r} has unsafe characters")
        _finite(command.x, "x")
        _finite(command.y, "y")
        if command.body_dir is not None:
            _in_range(command.body_dir, -180, 180, "body direction")
    elif isinstance(command, (Bye, Done)):
        pass
    else:
        raise CommandError(f"not a command: {type(command).__name__}")


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def serialize_command(command: Command) -> str:
    validate_command(command)
    f = format_real
    if isinstance(command, Dash):
        return f"(dash {f(command.power)} {f(command.direction)})"
    if isinstance(command, Turn):
        return f"(turn {f(command.moment)})"
    if isinstance(command, Kick):
        return f"(kick {f(command.power)} {f(command.direction)})"
    if isinstance(command, Move):
        return f"(move {f(command.x)} {f(command.y)})"
    if isinstance(command, TurnNeck):
        return f"(turn_neck {f(command.moment)})"
    if isinstance(command, Say):
        return f'(say "{_escape(command.text)}")'
    if isinstance(command, Catch):
        return f"(catch {f(command.direction)})"
    if isinstance(command, ChangeView):
        return f"(change_view {command.width})"
    if isinstance(command, InitCommand):
        goalie = " (goalie)" if command.goalie else ""
        return f"(init {command.team_name} (version {command.version}){goalie})"
    if isinstance(command, Bye):
        return "(bye)"
    if isinstance(command, ChangeMode):
        return f"(change_mode {command.mode})"
    if isinstance(command, MoveBall):
        tail = "" if command.vx is None else f" {f(command.vx)} {f(command.vy)}"
        return f"(move (ball) {f(command.x)} {f(command.y)}{tail})"
    if isinstance(command, MovePlayer):
        tail = "" if command.body_dir is None else f" {f(command.body_dir)}"
        return (f"(move (player {command.team} {command.unum}) "
                f"{f(command.x)} {f(command.y)}{tail})")
    if isinstance(command, Done):
        return "(done)"
    raise CommandError(f"not a command: {type(command).__name__}")
