"""Tour of the geometry kernel: vectors, angles, shapes, hulls.

Run with: python3 demos/geometry_tour.py
"""

import random

from ss2d.geom import (
    AngleDeg,
    Circle2D,
    Line2D,
    Segment2D,
    Sector2D,
    Vector2D,
    circle_line_intersections,
    convex_hull,
    line_intersection,
    normalize_angle,
)


def main():
    print("== vectors and angles ==")
    kick = Vector2D.from_polar(2.7, AngleDeg(-45))
    print(f"a 2.7 m kick at -45 deg lands the ball at {kick}")
    print(f"its bearing read back: {float(kick.th()):.1f} deg")
    print(f"normalize_angle(725) = {normalize_angle(725)}")
    spin = AngleDeg(120) + AngleDeg(120) + AngleDeg(121)
    print(f"three rotations of ~120 deg wrap to {float(spin):.0f}\n")

    print("== lines and segments ==")
    sideline = Line2D.from_points(Vector2D(-52.5, -34), Vector2D(52.5, -34))
    shot = Segment2D(Vector2D(0, 0), Vector2D(30, -40))
    hit = shot.line().intersection(sideline)
    print(f"a shot from kickoff toward (30, -40) crosses the top "
          f"sideline at {hit}")
    crossing = line_intersection(Line2D.from_points(Vector2D(0, -5), Vector2D(10, 5)),
                                 Line2D.from_points(Vector2D(0, 5), Vector2D(10, -5)))
    print(f"two diagonals meet at {crossing}\n")

    print("== circles ==")
    keeper_reach = Circle2D(Vector2D(50, 0), 2.0)
    goal_line = Line2D.from_points(Vector2D(52.5, -7), Vector2D(52.5, 7))
    print(f"keeper reach vs goal line: "
          f"{circle_line_intersections(keeper_reach, goal_line)}")
    ball_path = Line2D.from_points(Vector2D(40, -3), Vector2D(52, 1))
    for p in circle_line_intersections(keeper_reach, ball_path):
        print(f"  ball path enters reach at {p}")
    print()

    print("== sectors (view cones) ==")
    cone = Sector2D(Vector2D(0, 0), 0.0, 60.0, AngleDeg(-45), AngleDeg(45))
    for target in (Vector2D(20, 5), Vector2D(20, 25), Vector2D(-5, 0)):
        seen = "sees" if cone.contains(target) else "misses"
        print(f"  a player at origin facing 0 deg {seen} {target}")
    print()

    print("== convex hull of a scattered defense ==")
    rng = random.Random(4)
    backs = [Vector2D(rng.uniform(-45, -20), rng.uniform(-25, 25))
             for _ in range(12)]
    hull = convex_hull(backs)
    print(f"  {len(backs)} defenders, hull has {len(hull.vertices)} corners, "
          f"covering {hull.area():.0f} m^2")
    gap = Vector2D(-32, 0)
    inside = "inside" if hull.contains(gap) else "outside"
    print(f"  the hole at {gap} is {inside} their shape")


if __name__ == "__main__":
    main()
