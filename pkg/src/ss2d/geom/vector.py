"""Immutable 2D vectors (meters)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angle import AngleDeg, _deg
from .eps import EPS


@dataclass(frozen=True, slots=True)
class Vector2D:
    """A point or displacement in the pitch plane."""

    x: float = 0.0
    y: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"vector components must be finite, got ({self.x!r}, {self.y!r})")

    def __add__(self, other: Vector2D) -> Vector2D:
        return Vector2D(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vector2D) -> Vector2D:
        return Vector2D(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: float) -> Vector2D:
        return Vector2D(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> Vector2D:
        return Vector2D(self.x / scalar, self.y / scalar)

    def __neg__(self) -> Vector2D:
        return Vector2D(-self.x, -self.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def dist(self, other: Vector2D) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def dist_sq(self, other: Vector2D) -> float:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    def dot(self, other: Vector2D) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Vector2D) -> float:
        """Scalar z-component of the 3D cross product."""
        return self.x * other.y - self.y * other.x

    def th(self) -> AngleDeg:
        """Direction of this vector; 0deg for the zero vector."""
        return AngleDeg.atan2(self.y, self.x)

    def rotate(self, theta: AngleDeg | float) -> Vector2D:
        rad = math.radians(_deg(theta))
        c = math.cos(rad)
        s = math.sin(rad)
        return Vector2D(self.x * c - self.y * s, self.x * s + self.y * c)

    def unit(self) -> Vector2D:
        n = self.norm()
        if n < EPS:
            return Vector2D(0.0, 0.0)
        return Vector2D(self.x / n, self.y / n)

    def is_close(self, other: Vector2D, eps: float = EPS) -> bool:
        return self.dist(other) <= eps

    @staticmethod
    def from_polar(r: float, theta: AngleDeg | float) -> Vector2D:
        """Vector of length r pointing along theta; r must be >= 0."""
        if r < 0.0:
            raise ValueError(f"polar radius must be non-negative, got {r!r}")
        rad = math.radians(_deg(theta))
        return Vector2D(r * math.cos(rad), r * math.sin(rad))

    def __str__(self) -> str:
        return f"({self.x:.4g}, {self.y:.4g})"
