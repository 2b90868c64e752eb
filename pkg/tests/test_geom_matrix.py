import random

from ss2d.geom import Matrix2D, Vector2D


def test_transform_examples():
    assert Matrix2D.identity().transform(Vector2D(5, 7)) == Vector2D(5, 7)
    assert Matrix2D.translate(2, 3).transform(Vector2D(0, 0)) == Vector2D(2, 3)
    # right-to-left composition: translate first, then rotate
    m = Matrix2D.rotate(90) * Matrix2D.translate(1, 0)
    assert m.transform(Vector2D(0, 0)).is_close(Vector2D(0, 1))


def test_identity_fixes_everything():
    rng = random.Random(31)
    for _ in range(100):
        v = Vector2D(rng.uniform(-50, 50), rng.uniform(-50, 50))
        assert Matrix2D.identity().transform(v) == v


def _random_matrix(rng):
    kind = rng.randrange(3)
    if kind == 0:
        return Matrix2D.translate(rng.uniform(-5, 5), rng.uniform(-5, 5))
    if kind == 1:
        return Matrix2D.rotate(rng.uniform(-180, 180))
    return Matrix2D.scale(rng.uniform(0.2, 3), rng.uniform(0.2, 3))


def test_composition_associative():
    rng = random.Random(37)
    for _ in range(200):
        a, b, c = (_random_matrix(rng) for _ in range(3))
        v = Vector2D(rng.uniform(-10, 10), rng.uniform(-10, 10))
        left = ((a * b) * c).transform(v)
        right = (a * (b * c)).transform(v)
        assert left.is_close(right, 1e-9)


def test_scale_then_rotate_matches_manual_chain():
    rng = random.Random(41)
    for _ in range(100):
        s = Matrix2D.scale(2, 3)
        r = Matrix2D.rotate(rng.uniform(-180, 180))
        v = Vector2D(rng.uniform(-10, 10), rng.uniform(-10, 10))
        assert (r * s).transform(v).is_close(r.transform(s.transform(v)), 1e-9)
