"""World model: self-localization from landmarks and ball intercepts.

Hand-crafts the datagrams a server would send for a known true pose,
feeds them to a WorldModel, and compares what it believes to the truth.

Run with: python3 demos/world_tracking.py
"""

import math

from ss2d.geom import AngleDeg, Vector2D, normalize_angle
from ss2d.params import defaults
from ss2d.protocol import parse_message
from ss2d.worldmodel import WorldModel, landmark_table, predict_ball


def observed(landmark, pose_xy, face_deg):
    """True polar observation of a landmark from a pose."""
    rel = landmark - Vector2D(*pose_xy)
    dist = rel.norm()
    direction = normalize_angle(float(rel.th()) - face_deg)
    return dist, direction


def main():
    params = defaults()
    landmarks = landmark_table(params)

    true_pos = (-10.0, 5.0)
    true_face = 30.0
    print(f"true pose: position {true_pos}, facing {true_face} deg")

    picks = ["f c", "g r", "f c t", "f r t"]
    parts = []
    for name in picks:
        dist, direction = observed(landmarks[name], true_pos, true_face)
        parts.append(f"(({name}) {dist!r} {direction!r})")
    see_text = f"(see 1 {' '.join(parts)})"
    print(f"see datagram built from {len(picks)} landmarks")

    world = WorldModel(params, side="l", unum=7, team_name="Demo", mode="noisy")
    world.update(parse_message(
        "(sense_body 1 (view_mode high normal) (stamina 8000 1 130600) "
        "(speed 0 0) (head_angle 0))"))
    world.update(parse_message(see_text))

    me = world.self_state
    err = math.hypot(me.position.x - true_pos[0], me.position.y - true_pos[1])
    print(f"believed position: ({me.position.x:.6f}, {me.position.y:.6f}), "
          f"error {err:.2e} m")
    print(f"believed facing:   {float(me.face_direction):.6f} deg\n")

    print("== tracking a rolling ball ==")
    world.update(parse_message(
        f"(see 2 (({picks[0]}) {observed(landmarks[picks[0]], true_pos, true_face)[0]!r} "
        f"{observed(landmarks[picks[0]], true_pos, true_face)[1]!r}) "
        f"((b) 8.0 -30 -0.6 2.1))"))
    ball = world.ball
    print(f"ball believed at ({ball.position.x:.2f}, {ball.position.y:.2f}) "
          f"moving ({ball.velocity.x:.2f}, {ball.velocity.y:.2f})")
    for n in (1, 3, 6):
        ahead = predict_ball(ball, n, params)
        print(f"  in {n} cycles: ({ahead.x:.2f}, {ahead.y:.2f})")

    table = world.refresh_intercept()
    print(f"cycles for me to reach it: {table.self_cycles}")
    mine = "ours" if table.our_ball() else "theirs or nobody's"
    print(f"first to the ball: {mine}")


if __name__ == "__main__":
    main()
