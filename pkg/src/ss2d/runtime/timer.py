"""Decision timing driven by sense_body arrivals."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Tick:
    cycle: int
    decide_at: float          # monotonic time to run decide()
    deadline: float | None    # None in lockstep mode: the server waits


class SynchronousTimer:
    """One tick per cycle, keyed by the sense_body for that cycle.

    Lockstep: the tick fires immediately on arrival.  Wall clock: the
    decision runs at arrival + offset and must finish by
    arrival + step - guard, else the cycle's body command is dropped.
    """

    def __init__(self, lockstep: bool = True, step_ms: float = 100.0,
                 offset_ms: float = 30.0, guard_ms: float = 10.0):
        self.lockstep = lockstep
        self.step_ms = step_ms
        self.offset_ms = offset_ms
        self.guard_ms = guard_ms
        self.last_cycle = -1

    def on_sense(self, cycle: int, arrival: float) -> Tick | None:
        """Returns the cycle's tick, or None for duplicates and stale
        arrivals (idempotent per cycle)."""
        if cycle <= self.last_cycle:
            return None
        self.last_cycle = cycle
        if self.lockstep:
            return Tick(cycle, arrival, None)
        return Tick(cycle,
                    arrival + self.offset_ms / 1000.0,
                    arrival + (self.step_ms - self.guard_ms) / 1000.0)
