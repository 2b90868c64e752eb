import math
import random

from ss2d.geom import Polygon2D, Vector2D, convex_hull

from .oracles import hull_vertices_naive, point_in_hull_naive


def _ring(poly: Polygon2D):
    return [(v.x, v.y) for v in poly.vertices]


def test_interior_point_dropped():
    hull = convex_hull([Vector2D(0, 0), Vector2D(4, 0), Vector2D(0, 4), Vector2D(1, 1)])
    assert _ring(hull) == [(0, 0), (4, 0), (0, 4)]


def test_collinear_input_degenerates_to_extremes():
    hull = convex_hull([Vector2D(0, 0), Vector2D(1, 1), Vector2D(2, 2)])
    assert _ring(hull) == [(0, 0), (2, 2)]


def test_tiny_inputs():
    assert _ring(convex_hull([])) == []
    assert _ring(convex_hull([Vector2D(3, 1)])) == [(3, 1)]
    assert _ring(convex_hull([Vector2D(3, 1), Vector2D(3, 1)])) == [(3, 1)]
    assert _ring(convex_hull([Vector2D(2, 5), Vector2D(-1, 0)])) == [(-1, 0), (2, 5)]


def test_collinear_point_on_hull_edge_is_dropped():
    pts = [Vector2D(0, 0), Vector2D(4, 0), Vector2D(2, 0), Vector2D(0, 4), Vector2D(4, 4)]
    assert _ring(convex_hull(pts)) == [(0, 0), (4, 0), (4, 4), (0, 4)]


def _random_disc_points(rng, n):
    pts = []
    for _ in range(n):
        r = math.sqrt(rng.random())
        th = rng.uniform(0, 2 * math.pi)
        pts.append(Vector2D(r * math.cos(th), r * math.sin(th)))
    return pts


def test_matches_naive_half_plane_oracle_on_random_inputs():
    rng = random.Random(42)
    for _ in range(100):
        pts = _random_disc_points(rng, rng.randint(3, 50))
        hull = convex_hull(pts)
        expected = hull_vertices_naive([(p.x, p.y) for p in pts])
        assert set(_ring(hull)) == expected
        # counter-clockwise and strictly convex
        ring = _ring(hull)
        n = len(ring)
        for i in range(n):
            o, a, b = ring[i], ring[(i + 1) % n], ring[(i + 2) % n]
            cross = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
            assert cross > 0
        # every input point inside or on the hull
        for p in pts:
            assert point_in_hull_naive((p.x, p.y), ring)


def test_starts_at_lexicographically_smallest_vertex():
    rng = random.Random(9)
    for _ in range(20):
        pts = _random_disc_points(rng, 30)
        ring = _ring(convex_hull(pts))
        assert ring[0] == min(ring)
