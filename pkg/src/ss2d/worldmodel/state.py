"""Belief-state records: self, tracked objects, intercept table."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..geom import AngleDeg, Vector2D

AGING_FACTOR = 0.95
STALENESS_BOUND = 30  # cycles without a sighting before velocity is zeroed
UNKNOWN_ASSOC_RADIUS = 3.0  # nearest-track matching for unnumbered players


@dataclass
class SelfState:
    position: Vector2D = field(default_factory=lambda: Vector2D(0.0, 0.0))
    velocity: Vector2D = field(default_factory=lambda: Vector2D(0.0, 0.0))
    body_direction: AngleDeg = field(default_factory=lambda: AngleDeg(0.0))
    neck_direction: AngleDeg = field(default_factory=lambda: AngleDeg(0.0))
    stamina: float = 8000.0
    position_confidence: float = 0.0
    last_update_cycle: int = 0

    @property
    def face_direction(self) -> AngleDeg:
        """Global gaze: body plus relative neck."""
        return self.body_direction + self.neck_direction


@dataclass
class ObjectTrack:
    """Belief about one movable object (the ball or a player)."""

    identity: str  # "ball" or "player"
    side: str | None = None
    unum: int | None = None
    position: Vector2D = field(default_factory=lambda: Vector2D(0.0, 0.0))
    velocity: Vector2D = field(default_factory=lambda: Vector2D(0.0, 0.0))
    confidence: float = 0.0
    cycles_since_seen: int = 0

    @property
    def is_known(self) -> bool:
        return self.confidence > 0.0


UNREACHABLE = None  # intercept sentinel: no n within the horizon works


@dataclass(frozen=True)
class InterceptTable:
    """Cycles-to-ball per player; None marks unreachable."""

    self_cycles: int | None
    teammate_cycles: dict[int, int | None]
    opponent_cycles: dict[int, int | None]
    fastest_teammate: int | None
    fastest_opponent: int | None

    def our_ball(self) -> bool:
        """True when a teammate (self included) is no slower than every opponent."""
        ours = _best(self.teammate_cycles)
        theirs = _best(self.opponent_cycles)
        if ours is None:
            return False
        return theirs is None or ours <= theirs


def _best(cycles: dict[int, int | None]) -> int | None:
    reachable = [c for c in cycles.values() if c is not None]
    return min(reachable) if reachable else None


def argmin_unum(cycles: dict[int, int | None]) -> int | None:
    """Unum of the fastest entry; ties go to the lower uniform number."""
    best: tuple[int, int] | None = None
    for unum in sorted(cycles):
        c = cycles[unum]
        if c is None:
            continue
        if best is None or c < best[0]:
            best = (c, unum)
    return best[1] if best else None
