"""Angles in degrees, normalized to [-180, 180).

Convention (used by the whole package): x grows toward the right-hand
goal, y grows toward the bottom of the screen, 0 degrees points along
+x and positive angles rotate toward +y.  On a y-down display that is
a clockwise rotation, which matches the sign of directions on the
wire; the trigonometry itself is plain atan2/cos/sin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def normalize_angle(degrees: float) -> float:
    """Reduce an angle to the canonical [-180, 180) representative."""
    if not math.isfinite(degrees):
        raise ValueError(f"angle must be finite, got {degrees!r}")
    d = math.fmod(degrees, 360.0)
    if d < -180.0:
        d += 360.0
    elif d >= 180.0:
        d -= 360.0
    return d + 0.0  # collapse -0.0


@dataclass(frozen=True, slots=True)
class AngleDeg:
    """An angle in degrees, always stored normalized to [-180, 180)."""

    degrees: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "degrees", normalize_angle(self.degrees))

    def __float__(self) -> float:
        return self.degrees

    def __add__(self, other: AngleDeg | float) -> AngleDeg:
        return AngleDeg(self.degrees + _deg(other))

    def __radd__(self, other: float) -> AngleDeg:
        return AngleDeg(_deg(other) + self.degrees)

    def __sub__(self, other: AngleDeg | float) -> AngleDeg:
        return AngleDeg(self.degrees - _deg(other))

    def __rsub__(self, other: float) -> AngleDeg:
        return AngleDeg(_deg(other) - self.degrees)

    def __neg__(self) -> AngleDeg:
        return AngleDeg(-self.degrees)

    def abs(self) -> float:
        return abs(self.degrees)

    def radians(self) -> float:
        return math.radians(self.degrees)

    def cos(self) -> float:
        return math.cos(math.radians(self.degrees))

    def sin(self) -> float:
        return math.sin(math.radians(self.degrees))

    def tan(self) -> float:
        return math.tan(math.radians(self.degrees))

    def diff(self, other: AngleDeg | float) -> float:
        """Magnitude of the smaller arc between two angles, in [0, 180]."""
        return abs(normalize_angle(self.degrees - _deg(other)))

    def is_within(self, begin: AngleDeg | float, end: AngleDeg | float) -> bool:
        """True if this angle lies on the sweep from begin to end.

        The sweep runs through increasing degrees (mod 360), i.e. from
        begin toward +y first.  Both endpoints are included.
        """
        span = (_deg(end) - _deg(begin)) % 360.0
        rel = (self.degrees - _deg(begin)) % 360.0
        return rel <= span + 1e-9

    @staticmethod
    def from_radians(rad: float) -> AngleDeg:
        return AngleDeg(math.degrees(rad))

    @staticmethod
    def atan2(y: float, x: float) -> AngleDeg:
        if x == 0.0 and y == 0.0:
            return AngleDeg(0.0)
        return AngleDeg(math.degrees(math.atan2(y, x)))

    def __str__(self) -> str:
        return f"{self.degrees:.4g}deg"


def _deg(value: AngleDeg | float) -> float:
    return value.degrees if isinstance(value, AngleDeg) else float(value)
