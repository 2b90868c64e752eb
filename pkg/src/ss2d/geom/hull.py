"""Convex hull via the monotone chain sweep."""

from __future__ import annotations

from typing import Iterable

from .eps import EPS
from .shapes import Polygon2D
from .vector import Vector2D


def convex_hull(points: Iterable[Vector2D]) -> Polygon2D:
    """Hull polygon of a point set.

    Vertices come back in counter-clockwise order (positive cross
    product turns) starting from the lexicographically smallest point.
    Points that are collinear on a hull edge are dropped, so the result
    is strictly convex.  Degenerate inputs (fewer than 3 distinct
    non-collinear points) yield the distinct extreme points in
    ascending (x, y) order.
    """
    distinct = sorted(set((p.x, p.y) for p in points))
    n = len(distinct)
    if n <= 1:
        return Polygon2D(tuple(Vector2D(x, y) for x, y in distinct))

    def turn(o, a, b) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in distinct:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= EPS:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(distinct):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= EPS:
            upper.pop()
        upper.append(p)

    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:  # all points collinear: keep the two extremes
        ring = [distinct[0], distinct[-1]]
    return Polygon2D(tuple(Vector2D(x, y) for x, y in ring))
