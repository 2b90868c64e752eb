"""Closed regions: circle, rectangle, sector, triangle, polygon.

Containment is closed for every region type (boundary points count as
inside, with EPS slack), so all types share one rule instead of
per-shape special cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from .angle import AngleDeg
from .eps import EPS
from .line import Line2D, Segment2D
from .vector import Vector2D


@runtime_checkable
class Region(Protocol):
    """Anything that can answer point containment."""

    def contains(self, point: Vector2D) -> bool: ...


@dataclass(frozen=True, slots=True)
class Size2D:
    width: float
    height: float

    def __post_init__(self):
        if self.width < 0.0 or self.height < 0.0:
            raise ValueError(f"size must be non-negative, got {self.width}x{self.height}")


@dataclass(frozen=True, slots=True)
class Circle2D:
    center: Vector2D
    radius: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")

    def contains(self, point: Vector2D) -> bool:
        return self.center.dist(point) <= self.radius + EPS

    def intersection_with_line(self, line: Line2D) -> list[Vector2D]:
        """0, 1 (tangent) or 2 points on both the circle and the line.

        Two points come back sorted by (x, y) so callers see a stable order.
        """
        foot = line.projection(self.center)
        d = self.center.dist(foot)
        if abs(d - self.radius) < EPS:
            return [foot]
        if d > self.radius:
            return []
        half = math.sqrt(self.radius * self.radius - d * d)
        # unit direction along the line
        n = math.hypot(line.a, line.b)
        ux = -line.b / n
        uy = line.a / n
        p1 = Vector2D(foot.x - ux * half, foot.y - uy * half)
        p2 = Vector2D(foot.x + ux * half, foot.y + uy * half)
        return sorted([p1, p2], key=lambda p: (p.x, p.y))

    def intersection_with_circle(self, other: Circle2D) -> list[Vector2D]:
        """Intersection points of two circles (0, 1 or 2; [] for identical)."""
        d = self.center.dist(other.center)
        if d < EPS:
            return []
        # radical line: 2(x2-x1)x + 2(y2-y1)y + (x1^2+y1^2-r1^2) - (x2^2+y2^2-r2^2) = 0
        a = 2.0 * (other.center.x - self.center.x)
        b = 2.0 * (other.center.y - self.center.y)
        c = (
            self.center.norm_sq()
            - self.radius * self.radius
            - other.center.norm_sq()
            + other.radius * other.radius
        )
        return self.intersection_with_line(Line2D(a, b, c))


def circle_line_intersections(circle: Circle2D, line: Line2D) -> list[Vector2D]:
    return circle.intersection_with_line(line)


@dataclass(frozen=True, slots=True)
class Rect2D:
    """Axis-aligned rectangle given by its top-left corner (min x, min y)."""

    top_left: Vector2D
    size: Size2D

    def left(self) -> float:
        return self.top_left.x

    def right(self) -> float:
        return self.top_left.x + self.size.width

    def top(self) -> float:
        return self.top_left.y

    def bottom(self) -> float:
        return self.top_left.y + self.size.height

    def center(self) -> Vector2D:
        return Vector2D(self.top_left.x + self.size.width * 0.5,
                        self.top_left.y + self.size.height * 0.5)

    def contains(self, point: Vector2D) -> bool:
        return (
            self.left() - EPS <= point.x <= self.right() + EPS
            and self.top() - EPS <= point.y <= self.bottom() + EPS
        )

    @staticmethod
    def from_center(center: Vector2D, size: Size2D) -> Rect2D:
        return Rect2D(
            Vector2D(center.x - size.width * 0.5, center.y - size.height * 0.5), size
        )


@dataclass(frozen=True, slots=True)
class Sector2D:
    """Annular sector swept from angle_begin to angle_end through increasing degrees."""

    center: Vector2D
    radius_min: float
    radius_max: float
    angle_begin: AngleDeg
    angle_end: AngleDeg

    def __post_init__(self):
        if self.radius_min < 0.0 or self.radius_max < self.radius_min:
            raise ValueError(
                f"need 0 <= radius_min <= radius_max, got [{self.radius_min}, {self.radius_max}]"
            )

    def contains(self, point: Vector2D) -> bool:
        d = self.center.dist(point)
        if d < self.radius_min - EPS or d > self.radius_max + EPS:
            return False
        if d <= EPS:  # at the center only radius_min 0 sectors apply
            return self.radius_min <= EPS
        return (point - self.center).th().is_within(self.angle_begin, self.angle_end)


@dataclass(frozen=True, slots=True)
class Triangle2D:
    a: Vector2D
    b: Vector2D
    c: Vector2D

    def contains(self, point: Vector2D) -> bool:
        d1 = _edge_sign(self.a, self.b, point)
        d2 = _edge_sign(self.b, self.c, point)
        d3 = _edge_sign(self.c, self.a, point)
        has_neg = d1 < -EPS or d2 < -EPS or d3 < -EPS
        has_pos = d1 > EPS or d2 > EPS or d3 > EPS
        return not (has_neg and has_pos)

    def area(self) -> float:
        return abs(_edge_sign(self.a, self.b, self.c)) * 0.5


def _edge_sign(p: Vector2D, q: Vector2D, r: Vector2D) -> float:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


@dataclass(frozen=True, slots=True)
class Polygon2D:
    """Polygon over an ordered vertex tuple.

    Fewer than 3 vertices is a degenerate polygon that contains nothing.
    """

    vertices: tuple[Vector2D, ...] = ()

    def __init__(self, vertices=()):
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Segment2D]:
        n = len(self.vertices)
        if n < 2:
            return []
        return [Segment2D(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, point: Vector2D) -> bool:
        if len(self.vertices) < 3:
            return False
        for edge in self.edges():
            if edge.contains(point):
                return True
        # even-odd ray cast toward +x
        inside = False
        n = len(self.vertices)
        for i in range(n):
            p = self.vertices[i]
            q = self.vertices[(i + 1) % n]
            if (p.y > point.y) != (q.y > point.y):
                x_cross = p.x + (point.y - p.y) * (q.x - p.x) / (q.y - p.y)
                if point.x < x_cross:
                    inside = not inside
        return inside

    def area(self) -> float:
        """Unsigned shoelace area; 0 for degenerate polygons."""
        n = len(self.vertices)
        if n < 3:
            return 0.0
        acc = 0.0
        for i in range(n):
            p = self.vertices[i]
            q = self.vertices[(i + 1) % n]
            acc += p.x * q.y - q.x * p.y
        return abs(acc) * 0.5
