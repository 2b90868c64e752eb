"""2x3 affine transforms."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angle import AngleDeg, _deg
from .vector import Vector2D


@dataclass(frozen=True, slots=True)
class Matrix2D:
    """Affine map  v -> (m11*x + m12*y + dx,  m21*x + m22*y + dy)."""

    m11: float = 1.0
    m12: float = 0.0
    m21: float = 0.0
    m22: float = 1.0
    dx: float = 0.0
    dy: float = 0.0

    @staticmethod
    def identity() -> Matrix2D:
        return Matrix2D()

    @staticmethod
    def translate(dx: float, dy: float) -> Matrix2D:
        return Matrix2D(1.0, 0.0, 0.0, 1.0, dx, dy)

    @staticmethod
    def scale(sx: float, sy: float) -> Matrix2D:
        return Matrix2D(sx, 0.0, 0.0, sy, 0.0, 0.0)

    @staticmethod
    def rotate(theta: AngleDeg | float) -> Matrix2D:
        rad = math.radians(_deg(theta))
        c = math.cos(rad)
        s = math.sin(rad)
        return Matrix2D(c, -s, s, c, 0.0, 0.0)

    def __mul__(self, other: Matrix2D) -> Matrix2D:
        """Composition self o other: `other` is applied first."""
        return Matrix2D(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.m11 * other.dx + self.m12 * other.dy + self.dx,
            self.m21 * other.dx + self.m22 * other.dy + self.dy,
        )

    def transform(self, v: Vector2D) -> Vector2D:
        return Vector2D(
            self.m11 * v.x + self.m12 * v.y + self.dx,
            self.m21 * v.x + self.m22 * v.y + self.dy,
        )
