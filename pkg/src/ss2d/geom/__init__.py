"""2D geometry kernel: angles, vectors, lines, regions, transforms, hull."""

from .angle import AngleDeg, normalize_angle
from .eps import DET_EPS, EPS
from .hull import convex_hull
from .line import Line2D, Ray2D, Segment2D, line_intersection, nearest_point_on_segment
from .matrix import Matrix2D
from .shapes import (
    Circle2D,
    Polygon2D,
    Rect2D,
    Region,
    Sector2D,
    Size2D,
    Triangle2D,
    circle_line_intersections,
)
from .vector import Vector2D

__all__ = [
    "AngleDeg",
    "Circle2D",
    "DET_EPS",
    "EPS",
    "Line2D",
    "Matrix2D",
    "Polygon2D",
    "Ray2D",
    "Rect2D",
    "Region",
    "Sector2D",
    "Segment2D",
    "Size2D",
    "Triangle2D",
    "Vector2D",
    "circle_line_intersections",
    "convex_hull",
    "line_intersection",
    "nearest_point_on_segment",
    "normalize_angle",
]
