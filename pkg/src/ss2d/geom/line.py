"""Lines, rays and segments."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .angle import AngleDeg
from .eps import DET_EPS, EPS
from .vector import Vector2D


@dataclass(frozen=True, slots=True)
class Line2D:
    """Infinite line as coefficients of a*x + b*y + c = 0; (a, b) != (0, 0)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("line coefficients (a, b) must not both be zero")

    @staticmethod
    def from_points(p1: Vector2D, p2: Vector2D) -> Line2D:
        a = p2.y - p1.y
        b = p1.x - p2.x
        return Line2D(a, b, -a * p1.x - b * p1.y)

    @staticmethod
    def from_point_angle(point: Vector2D, theta: AngleDeg | float) -> Line2D:
        return Line2D.from_points(point, point + Vector2D.from_polar(1.0, theta))

    def intersection(self, other: Line2D) -> Vector2D | None:
        """Common point, or None when the lines are parallel or identical."""
        det = self.a * other.b - other.a * self.b
        if abs(det) < DET_EPS:
            return None
        return Vector2D(
            (self.b * other.c - other.b * self.c) / det,
            (other.a * self.c - self.a * other.c) / det,
        )

    def projection(self, point: Vector2D) -> Vector2D:
        """Foot of the perpendicular from point onto this line."""
        n = self.a * self.a + self.b * self.b
        t = (self.a * point.x + self.b * point.y + self.c) / n
        return Vector2D(point.x - self.a * t, point.y - self.b * t)

    def dist(self, point: Vector2D) -> float:
        return abs(self.a * point.x + self.b * point.y + self.c) / math.hypot(self.a, self.b)

    def contains(self, point: Vector2D) -> bool:
        return self.dist(point) <= EPS


def line_intersection(a: Line2D, b: Line2D) -> Vector2D | None:
    return a.intersection(b)


@dataclass(frozen=True, slots=True)
class Ray2D:
    """Half line from an origin along a direction."""

    origin: Vector2D
    direction: AngleDeg

    def line(self) -> Line2D:
        return Line2D.from_point_angle(self.origin, self.direction)

    def in_right_dir(self, point: Vector2D, margin_deg: float = 10.0) -> bool:
        """True when point lies on the forward side of the ray origin."""
        if point.is_close(self.origin):
            return True
        return (point - self.origin).th().diff(self.direction) < margin_deg

    def intersection_with_line(self, other: Line2D) -> Vector2D | None:
        p = self.line().intersection(other)
        if p is None or not self.in_right_dir(p, 90.0):
            return None
        return p

    def intersection(self, other: Ray2D) -> Vector2D | None:
        p = self.line().intersection(other.line())
        if p is None:
            return None
        if self.in_right_dir(p, 90.0) and other.in_right_dir(p, 90.0):
            return p
        return None


@dataclass(frozen=True, slots=True)
class Segment2D:
    """Segment between two endpoints.

    The endpoints may coincide; such a degenerate segment behaves as a
    single point for distance queries, and line() raises because no
    direction exists.
    """

    origin: Vector2D
    terminal: Vector2D

    def length(self) -> float:
        return self.origin.dist(self.terminal)

    def is_degenerate(self) -> bool:
        return self.origin.dist(self.terminal) <= EPS

    def line(self) -> Line2D:
        if self.is_degenerate():
            raise ValueError("degenerate segment has no carrier line")
        return Line2D.from_points(self.origin, self.terminal)

    def nearest_point(self, point: Vector2D) -> Vector2D:
        """Closest point of the segment to `point` (projection clamped to the ends)."""
        d = self.terminal - self.origin
        len_sq = d.norm_sq()
        if len_sq <= EPS * EPS:
            return self.origin
        t = (point - self.origin).dot(d) / len_sq
        if t <= 0.0:
            return self.origin
        if t >= 1.0:
            return self.terminal
        return self.origin + d * t

    def dist(self, point: Vector2D) -> float:
        return self.nearest_point(point).dist(point)

    def contains(self, point: Vector2D) -> bool:
        return self.dist(point) <= EPS

    def intersection(self, other: Segment2D) -> Vector2D | None:
        """Single crossing point of two segments, or None.

        None is also returned for parallel, overlapping or degenerate
        inputs that touch in more than a point; degenerate inputs that
        merely lie on the other segment report their own point.
        """
        if self.is_degenerate():
            return self.origin if other.contains(self.origin) else None
        if other.is_degenerate():
            return other.origin if self.contains(other.origin) else None
        p = self.line().intersection(other.line())
        if p is None:
            return None
        if self.contains(p) and other.contains(p):
            return p
        return None


def nearest_point_on_segment(segment: Segment2D, point: Vector2D) -> Vector2D:
    return segment.nearest_point(point)
