"""A deliberately small decision ladder.

This is scaffolding that proves the stack end to end, not a competitive
team: scan when the ball is lost, chase when fastest to it, shoot at
the opponent goal when the ball is at the feet, otherwise keep the
formation shape.
"""

from __future__ import annotations

from ..geom import Vector2D, normalize_angle
from ..params import ServerParamSet
from ..worldmodel import WorldModel, predict_ball
from .formation import FORMATION_433, home_position
from .outcome import BehaviorOutcome
from ..protocol import Dash, Kick, Move, Turn

# tunable ladder constants
TURN_THRESHOLD_DEG = 15.0   # dash only when roughly facing the target
SCAN_TURN_DEG = 60.0        # per-cycle scan speed while the ball is lost
HOME_DASH_POWER = 60.0      # stamina-friendly cap away from the ball
HOME_RADIUS = 2.0           # close enough to the formation point
INTERCEPT_HORIZON = 30      # chases further out are not worth planning

TELEPORT_MODES = ("before_kick_off", "goal_l", "goal_r")


def may_kick(mode: str, side: str) -> bool:
    """Kick rights: open play, or the restart belongs to our side."""
    return mode == "play_on" or mode in (f"kick_off_{side}",
                                         f"kick_in_{side}")


def opponent_goal(params: ServerParamSet, side: str) -> Vector2D:
    x = params.pitch_half_length
    return Vector2D(-x, 0.0) if side == "r" else Vector2D(x, 0.0)


def _bearing(me, target: Vector2D) -> float:
    """Angle the body must turn through to face the target."""
    rel = target - me.position
    if rel.norm() < 1e-9:
        return 0.0
    return normalize_angle(float(rel.th()) - float(me.body_direction))


def _seek(me, target: Vector2D, power: float) -> BehaviorOutcome:
    error = _bearing(me, target)
    if abs(error) > TURN_THRESHOLD_DEG:
        return BehaviorOutcome(body=Turn(error))
    return BehaviorOutcome(body=Dash(power, 0))


def _nearest_to_ball(world, unum: int) -> bool:
    """Straight-line chaser election; ties go to the lower number."""
    ball = world.ball.position
    best_unum = unum
    best = world.self_state.position.dist(ball)
    for mate_unum, track in world.teammates.items():
        if mate_unum == unum or not track.is_known:
            continue
        d = track.position.dist(ball)
        if d < best or (d == best and mate_unum < best_unum):
            best, best_unum = d, mate_unum
    return best_unum == unum


def decide_sample(world: WorldModel, params: ServerParamSet | None = None,
                  formation: dict[int, tuple[float, float]] | None = None
                  ) -> BehaviorOutcome:
    """Priority ladder over the current world belief.

    1. ball unknown: rotate to scan
    2. fastest of our side to the ball (and not already at it): intercept;
       when the ball is beyond everyone's horizon the nearest walks up
    3. ball at the feet: kick at the opponent goal center
    4. otherwise: hold the formation home position
    """
    if params is None:
        params = world.params
    if formation is None:
        formation = FORMATION_433
    me = world.self_state
    side = world.side if world.side in ("l", "r") else "l"
    unum = world.unum if world.unum is not None else 1
    mode = world.play_mode
    home = home_position(formation, unum, side)

    # dead-ball housekeeping: teleport back into shape while it is legal
    if mode in TELEPORT_MODES and me.position.dist(home) > HOME_RADIUS:
        return BehaviorOutcome(body=Move(home.x, home.y))

    if not world.ball.is_known:
        return BehaviorOutcome(body=Turn(SCAN_TURN_DEG))

    ball = world.ball
    kickable = me.position.dist(ball.position) <= params.kickable_area

    if kickable:  # zero cycles to intercept: rules 2 and 3 coincide
        if may_kick(mode, side):
            direction = _bearing(me, opponent_goal(params, side))
            return BehaviorOutcome(body=Kick(100, direction))
        # a restart we may not take: face the ball and wait for release
        return BehaviorOutcome(body=Turn(_bearing(me, ball.position)))

    table = world.intercept
    if table is None:
        table = world.refresh_intercept(INTERCEPT_HORIZON)
    if table.fastest_teammate == unum and table.self_cycles is not None:
        point = predict_ball(ball, table.self_cycles, params)
        return _seek(me, point, 100)
    if table.fastest_teammate is None and _nearest_to_ball(world, unum):
        # ball out of everyone's planning horizon: the nearest walks up
        return _seek(me, ball.position, 100)

    if me.position.dist(home) > HOME_RADIUS:
        return _seek(me, home, HOME_DASH_POWER)
    return BehaviorOutcome(body=Turn(_bearing(me, ball.position)))


def decide_idle(world: WorldModel,
                params: ServerParamSet | None = None) -> BehaviorOutcome:
    """Stand still; the reference opponent for liveness checks."""
    return BehaviorOutcome()
