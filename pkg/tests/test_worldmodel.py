import math
import random

import pytest

from ss2d.geom import AngleDeg, Vector2D
from ss2d.params import defaults
from ss2d.protocol import BodyState, SeenObject, parse_message
from ss2d.worldmodel import (
    ObjectTrack,
    SelfState,
    WorldModel,
    build_intercept_table,
    face_from_flags,
    face_from_line,
    fold_line_angle,
    globalize_position,
    globalize_velocity,
    landmark_table,
    line_relative_dir,
    line_table,
    localize_self,
    min_cycles_to_intercept,
    predict_ball,
)

from .oracles import intercept_oracle, localize_grid_oracle

PARAMS = defaults()


def _see(text):
    msg = parse_message(text)
    assert type(msg).__name__ == "SeeMsg"
    return msg


def _track(x, y, vx=0.0, vy=0.0, identity="ball", **kw):
    return ObjectTrack(identity, position=Vector2D(x, y),
                       velocity=Vector2D(vx, vy), confidence=1.0, **kw)


# --- landmark table ----------------------------------------------------------

def test_landmark_table_layout():
    table = landmark_table(PARAMS)
    flags = [k for k in table if k.startswith("f")]
    goals = [k for k in table if k.startswith("g")]
    assert len(flags) == 53
    assert len(goals) == 2
    assert table["f c"] == Vector2D(0, 0)
    assert table["g l"] == Vector2D(-52.5, 0)
    assert table["f r t"] == Vector2D(52.5, -34)
    assert table["f p l c"] == Vector2D(-36, 0)
    assert table["f t l 50"] == Vector2D(-50, -39)
    assert table["f r b 30"] == Vector2D(57.5, 30)
    assert table["f g l t"] == Vector2D(-52.5, -7.01)


# --- localization ------------------------------------------------------------

def test_single_landmark_back_projection():
    # flag at the origin, seen 10 m dead ahead while facing 0deg
    see = _see("(see 0 ((f c) 10 0))")
    estimate = localize_self(see, BodyState(), PARAMS, SelfState())
    assert estimate is not None
    assert estimate.position.is_close(Vector2D(-10, 0), 1e-9)
    assert estimate.position_confidence == 1.0


def test_two_flag_localization_matches_grid_oracle():
    # truth: self at (5, -5), facing 0; flags at (0,0) and (10,0) are
    # "f c" and a custom mark; use two real landmarks instead
    table = landmark_table(PARAMS)
    truth = Vector2D(5.0, -5.0)
    face = 0.0
    idents = ["f c", "f p r c"]  # (0,0) and (36,0)
    obs_parts = []
    observations = []
    for ident in idents:
        rel = table[ident] - truth
        d = rel.norm()
        a = float(rel.th()) - face
        obs_parts.append((ident, d, a))
        observations.append((ident, d, a))
    see_text = "(see 0 " + " ".join(
        f"(({ident}) {d!r} {a!r})" for ident, d, a in obs_parts) + ")"
    estimate = localize_self(_see(see_text), BodyState(), PARAMS,
                             SelfState(position=Vector2D(99, 99)))
    assert estimate is not None
    assert estimate.position.is_close(truth, 1e-6)
    assert abs(float(estimate.face_direction - AngleDeg(face))) < 1e-6

    coords = {k: (v.x, v.y) for k, v in table.items()}
    ox, oy, of = localize_grid_oracle(observations, coords)
    assert math.hypot(ox - truth.x, oy - truth.y) < 0.05
    assert abs(of - face) < 0.5


def test_two_circle_ambiguity_resolved_by_bearings():
    # the classic two-intersection setup: both circles pass through
    # (5, -5) and (5, 5); the relative bearings pick exactly one
    table = {"a": Vector2D(0.0, 0.0), "b": Vector2D(10.0, 0.0)}
    truth = Vector2D(5.0, -5.0)
    face = 90.0
    obs = []
    for ident in ("a", "b"):
        rel = table[ident] - truth
        obs.append(SeenObject(kind="flag", ident=ident, distance=rel.norm(),
                              direction=float(rel.th()) - face))
    got_face = face_from_flags(obs[0], obs[1], table)
    assert abs(got_face - face) < 1e-9
    back = table["a"] - Vector2D.from_polar(obs[0].distance,
                                            AngleDeg(got_face + obs[0].direction))
    assert back.is_close(truth, 1e-9)


def test_face_from_flags_random_scenes():
    table = landmark_table(PARAMS)
    idents = sorted(table)
    rng = random.Random(4242)
    for _ in range(300):
        truth = Vector2D(rng.uniform(-50, 50), rng.uniform(-32, 32))
        face = rng.uniform(-180, 179.9)
        a, b = rng.sample(idents, 2)
        obs = []
        for ident in (a, b):
            rel = table[ident] - truth
            if rel.norm() < 1.0:
                break
            obs.append(SeenObject(kind="flag", ident=ident, distance=rel.norm(),
                                  direction=float(AngleDeg(float(rel.th()) - face))))
        if len(obs) < 2:
            continue
        got = face_from_flags(obs[0], obs[1], table)
        if got is None:
            continue
        assert abs(float(AngleDeg(got) - AngleDeg(face))) < 1e-6


def test_line_face_recovery_round_trip():
    lines = line_table(PARAMS)
    rng = random.Random(77)
    for _ in range(500):
        position = Vector2D(rng.uniform(-50, 50), rng.uniform(-32, 32))
        face = rng.uniform(-179.9, 179.9)
        heading = Vector2D.from_polar(1.0, AngleDeg(face))
        for ident, (axis, fixed_axis, coordinate) in lines.items():
            if fixed_axis == "x":
                toward = coordinate - position.x
                component = heading.x
            else:
                toward = coordinate - position.y
                component = heading.y
            if component * toward <= 1e-6:
                continue  # not facing this line
            reported = line_relative_dir(axis, face)
            obs = SeenObject(kind="line", ident=ident, distance=5.0,
                             direction=reported)
            got = face_from_line(obs, PARAMS, position)
            assert got is not None
            assert abs(float(AngleDeg(got) - AngleDeg(face))) < 1e-9


def test_fold_line_angle_range():
    for deg in (-270.0, -90.0, 0.0, 89.9, 90.0, 91.0, 180.0, 359.0):
        folded = fold_line_angle(deg)
        assert -90.0 < folded <= 90.0


# --- globalization -----------------------------------------------------------

def test_globalize_straight_ahead():
    me = SelfState(position=Vector2D(0, 0), position_confidence=1.0)
    obs = SeenObject(kind="ball", distance=5.0, direction=0.0)
    assert globalize_position(me, obs).is_close(Vector2D(5, 0), 1e-9)


def test_globalize_neck_rotated():
    me = SelfState(position=Vector2D(0, 0), neck_direction=AngleDeg(90),
                   position_confidence=1.0)
    obs = SeenObject(kind="ball", distance=5.0, direction=0.0)
    # +90deg looks toward +y (down the screen)
    assert globalize_position(me, obs).is_close(Vector2D(0, 5), 1e-9)


def test_radial_closing_velocity():
    me = SelfState(position=Vector2D(0, 0), position_confidence=1.0)
    obs = SeenObject(kind="ball", distance=5.0, direction=0.0,
                     dist_change=-0.8, dir_change=0.0)
    velocity = globalize_velocity(me, obs)
    assert velocity.is_close(Vector2D(-0.8, 0), 1e-9)


def test_velocity_inversion_against_forward_model():
    # forward model: what an exact-mode observer would report
    rng = random.Random(2024)
    for _ in range(400):
        spos = Vector2D(rng.uniform(-30, 30), rng.uniform(-20, 20))
        svel = Vector2D(rng.uniform(-1, 1), rng.uniform(-1, 1))
        bpos = Vector2D(rng.uniform(-30, 30), rng.uniform(-20, 20))
        bvel = Vector2D(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5))
        face = rng.uniform(-180, 179.9)
        rel = bpos - spos
        d = rel.norm()
        if d < 0.5:
            continue
        erel = rel * (1.0 / d)
        etan = Vector2D(-erel.y, erel.x)
        rel_vel = bvel - svel
        dist_change = rel_vel.dot(erel)
        dir_change = math.degrees(rel_vel.dot(etan) / d)
        me = SelfState(position=spos, velocity=svel,
                       body_direction=AngleDeg(face), position_confidence=1.0)
        obs = SeenObject(kind="ball", distance=d,
                         direction=float(AngleDeg(float(rel.th()) - face)),
                         dist_change=dist_change, dir_change=dir_change)
        got = globalize_velocity(me, obs)
        assert got.is_close(bvel, 1e-7), (bvel, got)


# --- update semantics ----------------------------------------------------------

def _fresh_world(**kw):
    kw.setdefault("side", "l")
    kw.setdefault("unum", 1)
    kw.setdefault("team_name", "Alpha")
    return WorldModel(PARAMS, **kw)


def test_fullstate_is_ground_truth():
    world = _fresh_world(mode="fullstate")
    world.update(parse_message(
        "(fullstate 1 (pmode play_on) (b 3 4 0 0) (p l 1 0 -10 0 0 0 0 0 8000))"))
    assert world.ball.position == Vector2D(3, 4)
    assert world.ball.confidence == 1.0
    assert world.self_state.position == Vector2D(-10, 0)


def test_fullstate_exactness_bit_for_bit():
    rng = random.Random(31337)
    world = _fresh_world(mode="fullstate")
    for cycle in range(1, 60):
        values = [rng.uniform(-50, 50) for _ in range(4)]
        players = []
        truth = {}
        for side in ("l", "r"):
            for unum in range(1, 12):
                px, py = rng.uniform(-52, 52), rng.uniform(-34, 34)
                vx, vy = rng.uniform(-1, 1), rng.uniform(-1, 1)
                body, neck = rng.uniform(-180, 179), rng.uniform(-90, 90)
                players.append(f"(p {side} {unum} 0 {px!r} {py!r} {vx!r} {vy!r}"
                               f" {body!r} {neck!r} {rng.uniform(0, 8000)!r})")
                truth[(side, unum)] = (px, py, vx, vy)
        text = (f"(fullstate {cycle} (pmode play_on) "
                f"(b {values[0]!r} {values[1]!r} {values[2]!r} {values[3]!r}) "
                + " ".join(players) + ")")
        world.update(parse_message(text))
        assert world.ball.position.x == values[0]
        assert world.ball.position.y == values[1]
        assert world.ball.velocity.x == values[2]
        assert world.ball.velocity.y == values[3]
        me = truth[("l", 1)]
        assert (world.self_state.position.x, world.self_state.position.y) == me[:2]
        assert (world.self_state.velocity.x, world.self_state.velocity.y) == me[2:]
        for unum in range(2, 12):
            tx, ty, tvx, tvy = truth[("l", unum)]
            track = world.teammates[unum]
            assert (track.position.x, track.position.y) == (tx, ty)
            assert (track.velocity.x, track.velocity.y) == (tvx, tvy)
        for unum in range(1, 12):
            tx, ty, tvx, tvy = truth[("r", unum)]
            track = world.opponents[unum]
            assert (track.position.x, track.position.y) == (tx, ty)
            assert (track.velocity.x, track.velocity.y) == (tvx, tvy)


def test_unseen_ball_extrapolates_geometric_series():
    world = _fresh_world()
    world.ball.position = Vector2D(0, 0)
    world.ball.velocity = Vector2D(1, 0)
    world.ball.confidence = 1.0
    world.update(parse_message("(sense_body 2 (stamina 8000 1 1))"))
    assert world.ball.position.x == pytest.approx(1 + 0.94)
    assert world.ball.position.y == 0
    assert world.ball.confidence == pytest.approx(0.95 ** 2)
    assert world.ball.cycles_since_seen == 2


def test_empty_see_only_ages():
    world = _fresh_world()
    world.ball.position = Vector2D(5, 5)
    world.ball.velocity = Vector2D(0, 0)
    world.ball.confidence = 1.0
    world.update(parse_message("(see 1)"))
    assert world.ball.position == Vector2D(5, 5)
    assert world.ball.confidence == pytest.approx(0.95)


def test_confidence_strictly_decreasing_until_resighted():
    world = _fresh_world()
    world.ball.confidence = 1.0
    world.ball.velocity = Vector2D(0.5, 0)
    last = 1.0
    for cycle in range(1, 40):
        world.update(parse_message(f"(sense_body {cycle} (stamina 8000 1 1))"))
        assert world.ball.confidence < last
        last = world.ball.confidence
    assert world.ball.velocity == Vector2D(0, 0)  # stale: velocity zeroed
    world.update(parse_message('(see 40 ((b) 10 0))'))
    assert world.ball.confidence == 1.0
    assert world.ball.cycles_since_seen == 0


def test_out_of_order_message_dropped(caplog):
    import logging
    world = _fresh_world()
    world.update(parse_message("(sense_body 5 (stamina 8000 1 1))"))
    with caplog.at_level(logging.WARNING, logger="ss2d.worldmodel"):
        world.update(parse_message("(sense_body 3 (stamina 10 1 1))"))
    assert world.current_cycle == 5
    assert world.self_state.stamina == 8000
    assert any("out-of-order" in r.message for r in caplog.records)


def test_unknown_player_association():
    world = _fresh_world()
    world.self_state = SelfState(position=Vector2D(0, 0), position_confidence=1.0)
    world.opponents[5] = ObjectTrack("player", side="r", unum=5,
                                     position=Vector2D(10, 0),
                                     velocity=Vector2D(0, 0),
                                     confidence=0.5, cycles_since_seen=3)
    # no landmark in view: self stays dead-reckoned at the origin, and
    # the anonymous sighting lands 1 m from the stale track: same player
    world.update(parse_message("(see 1 ((p) 11 0))"))
    track = world.opponents[5]
    assert track.cycles_since_seen == 0
    assert track.confidence == 1.0
    assert track.position.dist(Vector2D(11, 0)) < 1e-6
    assert not world.unknowns
    # far sighting: a new unknown track instead
    world.update(parse_message("(see 2 ((p) 30 0))"))
    assert len(world.unknowns) == 1


def test_sense_body_restores_velocity_in_face_frame():
    world = _fresh_world()
    world.self_state.body_direction = AngleDeg(90)
    world.self_state.position_confidence = 1.0
    world.update(parse_message(
        "(sense_body 1 (view_mode high normal) (stamina 7500 1 1)"
        " (speed 0.4 0) (head_angle 0))"))
    assert world.self_state.velocity.is_close(Vector2D(0, 0.4), 1e-9)
    assert world.self_state.stamina == 7500


def test_playmode_via_referee():
    world = _fresh_world()
    world.update(parse_message("(hear 10 referee kick_off_r)"))
    assert world.play_mode == "kick_off_r"


# --- prediction -----------------------------------------------------------------

def test_predict_ball_examples():
    track = _track(0, 0, 1, 0)
    assert predict_ball(track, 0, PARAMS) == Vector2D(0, 0)
    p2 = predict_ball(track, 2, PARAMS)
    assert p2.x == pytest.approx(1.94) and p2.y == 0
    # the geometric series tends to 1/(1-0.94); after 50 steps the gap
    # is 0.94^50/0.06 = 0.7556, so bracket it rather than eyeball it
    limit = Vector2D(1 / (1 - 0.94), 0)
    gap = predict_ball(track, 50, PARAMS).dist(limit)
    assert gap == pytest.approx(0.94 ** 50 / 0.06, abs=1e-9)
    assert gap < 0.8


def test_predict_ball_closed_form_matches_step_loop():
    rng = random.Random(555)
    for _ in range(200):
        track = _track(rng.uniform(-50, 50), rng.uniform(-30, 30),
                       rng.uniform(-3, 3), rng.uniform(-3, 3))
        n = rng.randrange(0, 101)
        pos, vel = track.position, track.velocity
        for _ in range(n):
            pos = pos + vel
            vel = vel * PARAMS.ball_decay
        assert predict_ball(track, n, PARAMS).dist(pos) < 1e-9


# --- intercept --------------------------------------------------------------------

def test_intercept_already_kickable():
    ball = _track(0, 0)
    player = SelfState(position=Vector2D(0.5, 0), position_confidence=1.0)
    assert min_cycles_to_intercept(player, ball, PARAMS) == 0


def test_intercept_straight_run():
    ball = _track(10, 0)
    player = SelfState(position=Vector2D(0, 0), position_confidence=1.0)
    n = min_cycles_to_intercept(player, ball, PARAMS)
    oracle = intercept_oracle((0.0, 0.0), (0.0, 0.0), 0.0, (10.0, 0.0),
                              (0.0, 0.0), PARAMS, 50)
    assert n == oracle
    # sanity: the dash-only reachable distance brackets 10 - kickable
    need = 10 - (PARAMS.player_size + PARAMS.ball_size + PARAMS.kickable_margin)
    dist_n = _dash_only_distance(n)
    dist_prev = _dash_only_distance(n - 1)
    assert dist_n >= need > dist_prev


def _dash_only_distance(cycles):
    speed = 0.0
    covered = 0.0
    for _ in range(cycles):
        speed = min(speed + 0.6, PARAMS.player_speed_max)
        covered += speed
        speed *= PARAMS.player_decay
    return covered


def test_intercept_unreachable():
    ball = _track(40, 0, 3.0, 0)
    player = SelfState(position=Vector2D(0, 0), position_confidence=1.0)
    assert min_cycles_to_intercept(player, ball, PARAMS) is None


def test_intercept_matches_oracle_randomized():
    rng = random.Random(987654)
    horizon = 30
    for trial in range(300):
        px, py = rng.uniform(-40, 40), rng.uniform(-25, 25)
        speed = rng.uniform(0, PARAMS.player_speed_max)
        vdir = rng.uniform(-180, 179.9)
        vx = speed * math.cos(math.radians(vdir))
        vy = speed * math.sin(math.radians(vdir))
        body = rng.uniform(-180, 179.9)
        bx, by = rng.uniform(-40, 40), rng.uniform(-25, 25)
        bs = rng.uniform(0, PARAMS.ball_speed_max)
        bdir = rng.uniform(-180, 179.9)
        bvx = bs * math.cos(math.radians(bdir))
        bvy = bs * math.sin(math.radians(bdir))

        if trial % 2 == 0:
            player = SelfState(position=Vector2D(px, py),
                               velocity=Vector2D(vx, vy),
                               body_direction=AngleDeg(body),
                               position_confidence=1.0)
            body_arg = float(AngleDeg(body))
        else:
            player = ObjectTrack("player", side="l", unum=2,
                                 position=Vector2D(px, py),
                                 velocity=Vector2D(vx, vy), confidence=1.0)
            body_arg = None
        ball = _track(bx, by, bvx, bvy)
        got = min_cycles_to_intercept(player, ball, PARAMS, horizon)
        want = intercept_oracle((px, py), (vx, vy), body_arg, (bx, by),
                                (bvx, bvy), PARAMS, horizon)
        assert got == want, (trial, got, want)


def test_intercept_table_self_only():
    world = _fresh_world()
    world.self_state = SelfState(position=Vector2D(0.5, 0), position_confidence=1.0)
    world.ball.position = Vector2D(0, 0)
    world.ball.velocity = Vector2D(0, 0)
    world.ball.confidence = 1.0
    table = world.refresh_intercept()
    assert table.self_cycles == 0
    assert table.teammate_cycles[1] == 0
    assert table.fastest_teammate == 1
    assert table.fastest_opponent is None
    assert table.our_ball()


def test_intercept_table_prefers_nearer_teammate():
    world = _fresh_world()
    world.self_state = SelfState(position=Vector2D(-40, 20), position_confidence=1.0)
    world.ball.position = Vector2D(0, 0)
    world.ball.confidence = 1.0
    world.teammates[7] = _track(5, 0, identity="player", side="l", unum=7)
    world.teammates[9] = _track(20, 0, identity="player", side="l", unum=9)
    table = world.refresh_intercept()
    assert table.fastest_teammate == 7
    assert table.teammate_cycles[7] < table.teammate_cycles[9]


def test_intercept_table_requires_ball():
    from ss2d.worldmodel import NoBallError
    world = _fresh_world()
    with pytest.raises(NoBallError):
        world.refresh_intercept()


def test_intercept_tie_breaks_by_lower_unum():
    world = _fresh_world()
    world.self_state = SelfState(position=Vector2D(-40, 20), position_confidence=1.0)
    world.ball.position = Vector2D(0, 0)
    world.ball.confidence = 1.0
    world.teammates[9] = _track(5, 0, identity="player", side="l", unum=9)
    world.teammates[4] = _track(-5, 0, identity="player", side="l", unum=4)
    table = world.refresh_intercept()
    assert table.teammate_cycles[4] == table.teammate_cycles[9]
    assert table.fastest_teammate == 4
