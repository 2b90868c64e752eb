"""The decision result handed back to the agent loop."""

from __future__ import annotations

from dataclasses import dataclass

from ..protocol import ChangeView, Command, Say, TurnNeck


@dataclass(frozen=True, slots=True)
class BehaviorOutcome:
    """At most one body command plus the cheap side-channel commands.

    The runtime's budget validator enforces the invariant; behaviors
    keep it by construction (a single body slot).
    """

    body: Command | None = None
    turn_neck: TurnNeck | None = None
    say: Say | None = None
    change_view: ChangeView | None = None
    trainer_commands: tuple[Command, ...] = ()
