"""Role-gated command budgets.

A decision outcome is duck typed: optional attributes body, turn_neck,
say, change_view, trainer_commands.  Validation turns it into the wire
command list, enforcing at most one body command and the role's rights
before anything is sent (the harness audits the same rules server side).
"""

from __future__ import annotations

from ..protocol import (
    BODY_COMMANDS,
    ChangeView,
    Command,
    Say,
    TRAINER_COMMANDS,
    TurnNeck,
    format_real,
)


class BudgetError(ValueError):
    """Outcome violates the per-cycle command budget or role rights."""


def validate_outcome(role: str, outcome) -> list[Command]:
    if outcome is None:
        return []
    commands: list[Command] = []

    body = getattr(outcome, "body", None)
    neck = getattr(outcome, "turn_neck", None)
    say = getattr(outcome, "say", None)
    view = getattr(outcome, "change_view", None)
    trainer_cmds = tuple(getattr(outcome, "trainer_commands", ()) or ())

    if role == "player":
        if trainer_cmds:
            raise BudgetError("players cannot issue trainer commands")
        if body is not None:
            if not isinstance(body, BODY_COMMANDS):
                raise BudgetError(f"not a body command: {body!r}")
            commands.append(body)
        if neck is not None:
            if not isinstance(neck, TurnNeck):
                raise BudgetError(f"turn_neck expected, got {neck!r}")
            commands.append(neck)
        if view is not None:
            if not isinstance(view, ChangeView):
                raise BudgetError(f"change_view expected, got {view!r}")
            commands.append(view)
        if say is not None:
            if not isinstance(say, Say):
                raise BudgetError(f"say expected, got {say!r}")
            commands.append(say)
        return commands

    if role == "trainer":
        if body is not None or neck is not None or view is not None:
            raise BudgetError("trainer has no body")
        for cmd in trainer_cmds:
            if not isinstance(cmd, TRAINER_COMMANDS):
                raise BudgetError(f"not a trainer command: {cmd!r}")
            commands.append(cmd)
        return commands

    if role == "coach":
        if body is not None or trainer_cmds:
            raise BudgetError("coach may only say")
        if say is not None:
            if not isinstance(say, Say):
                raise BudgetError(f"say expected, got {say!r}")
            commands.append(say)
        return commands

    raise BudgetError(f"unknown role {role!r}")


def drop_body(commands: list[Command]) -> list[Command]:
    """Late cycle: strip the body command, keep the cheap ones."""
    return [c for c in commands if not isinstance(c, BODY_COMMANDS)]


def command_summary(command: Command) -> str:
    """Compact human form for logs, e.g. kick(100,0)."""
    name = type(command).__name__.lower()
    values = []
    for field in command.__dataclass_fields__:
        value = getattr(command, field)
        if isinstance(value, bool):
            values.append("1" if value else "0")
        elif isinstance(value, (int, float)):
            values.append(format_real(float(value)))
        elif value is None:
            continue
        else:
            values.append(str(value))
    return f"{name}({','.join(values)})"
