"""Ball prediction and intercept search.

The movement model is deliberately small: an optional idealized turn
on the first cycle (body snaps onto the aim angle while momentum still
carries the player), then max-power dashes with acceleration capped,
speed saturating at player_speed_max and velocity decaying per cycle.
No stamina depletion here; the harness owns stamina.  The search is
exhaustive over the horizon with a scalar reachability prune, so a
test oracle running the same dynamics must agree exactly.
"""

from __future__ import annotations

import math

from ..geom import Vector2D
from ..params import ServerParamSet
from .state import InterceptTable, ObjectTrack, SelfState, argmin_unum

DEFAULT_HORIZON = 50


class NoBallError(ValueError):
    """The ball is unknown this cycle; no intercept table can be built."""


def predict_ball(track: ObjectTrack, n: int, params: ServerParamSet) -> Vector2D:
    """Ball position after n free steps (pos += vel; vel *= decay)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return track.position
    decay = params.ball_decay
    scale = (1.0 - decay ** n) / (1.0 - decay)
    return track.position + track.velocity * scale


def ball_path(position: Vector2D, velocity: Vector2D, horizon: int,
              params: ServerParamSet) -> list[Vector2D]:
    """Iteratively stepped ball positions for n = 0..horizon."""
    path = [position]
    pos, vel = position, velocity
    for _ in range(horizon):
        pos = pos + vel
        vel = vel * params.ball_decay
        path.append(pos)
    return path


def min_cycles_to_intercept(player: ObjectTrack | SelfState,
                            ball: ObjectTrack,
                            params: ServerParamSet,
                            horizon: int = DEFAULT_HORIZON) -> int | None:
    """Smallest n <= horizon that puts the player kickably close to the
    ball after n cycles, or None when no such n exists."""
    if not ball.is_known:
        raise NoBallError("ball position unknown")
    return _search(player, ball.position, ball.velocity, params, horizon)


def _search(player: ObjectTrack | SelfState, ball_pos: Vector2D,
            ball_vel: Vector2D, params: ServerParamSet, horizon: int) -> int | None:
    # hot path: this runs for up to 23 players every cycle of a match,
    # so it works in plain floats rather than vector values
    px, py = player.position.x, player.position.y
    vx, vy = player.velocity.x, player.velocity.y
    body_dir = player.body_direction if isinstance(player, SelfState) else None

    kickable = params.player_size + params.ball_size + params.kickable_margin
    kickable_sq = kickable * kickable
    speed_max = params.player_speed_max
    decay = params.player_decay
    accel = min(100.0 * params.dash_power_rate,
                float(params.get("player_accel_max", 1.0)))
    ball_decay = params.ball_decay

    path = [(ball_pos.x, ball_pos.y)]
    bx, by = ball_pos.x, ball_pos.y
    bvx, bvy = ball_vel.x, ball_vel.y
    for _ in range(horizon):
        bx = bx + bvx
        by = by + bvy
        bvx = bvx * ball_decay
        bvy = bvy * ball_decay
        path.append((bx, by))

    dx = px - path[0][0]
    dy = py - path[0][1]
    if dx * dx + dy * dy <= kickable_sq:
        return 0

    if body_dir is not None:
        rad = math.radians(float(body_dir))
        body_ux = 1.0 * math.cos(rad)
        body_uy = 1.0 * math.sin(rad)

    def run_dashes(x: float, y: float, wx: float, wy: float,
                   ux: float, uy: float, count: int) -> tuple[float, float]:
        for _ in range(count):
            wx = wx + ux * accel
            wy = wy + uy * accel
            speed = math.hypot(wx, wy)
            if speed > speed_max:
                scale = speed_max / speed
                wx = wx * scale
                wy = wy * scale
            x = x + wx
            y = y + wy
            wx = wx * decay
            wy = wy * decay
        return x, y

    # per-cycle displacement is bounded by the speed cap, or by the
    # current speed when the state starts above the cap (decay only
    # pulls it down), so this skip can never discard a feasible n
    bound_speed = max(speed_max, math.hypot(vx, vy))

    for n in range(1, horizon + 1):
        tx, ty = path[n]
        if math.hypot(px - tx, py - ty) - kickable > n * bound_speed:
            continue
        if body_dir is not None:
            x, y = run_dashes(px, py, vx, vy, body_ux, body_uy, n)
            dx = x - tx
            dy = y - ty
            if dx * dx + dy * dy <= kickable_sq:
                return n
        # turn-first plan: drift through the turn cycle, then dash
        drift_x = px + vx
        drift_y = py + vy
        wx = vx * decay
        wy = vy * decay
        aim_x = tx - drift_x
        aim_y = ty - drift_y
        norm = math.hypot(aim_x, aim_y)
        if norm > 0.0:
            s = 1.0 / norm
            ux, uy = aim_x * s, aim_y * s
        else:
            ux, uy = 1.0, 0.0
        x, y = run_dashes(drift_x, drift_y, wx, wy, ux, uy, n - 1)
        dx = x - tx
        dy = y - ty
        if dx * dx + dy * dy <= kickable_sq:
            return n
    return None


def build_intercept_table(world, horizon: int = DEFAULT_HORIZON) -> InterceptTable:
    """Evaluate every tracked player against the current ball track."""
    ball = world.ball
    if not ball.is_known:
        raise NoBallError("ball position unknown")
    params = world.params

    self_cycles = min_cycles_to_intercept(world.self_state, ball, params, horizon)

    teammate_cycles: dict[int, int | None] = {}
    opponent_cycles: dict[int, int | None] = {}
    for unum in range(1, 12):
        mate = world.teammates.get(unum)
        if world.unum == unum:
            teammate_cycles[unum] = self_cycles
        elif mate is not None and mate.is_known:
            teammate_cycles[unum] = min_cycles_to_intercept(mate, ball, params, horizon)
        else:
            teammate_cycles[unum] = None
        opp = world.opponents.get(unum)
        if opp is not None and opp.is_known:
            opponent_cycles[unum] = min_cycles_to_intercept(opp, ball, params, horizon)
        else:
            opponent_cycles[unum] = None

    return InterceptTable(
        self_cycles=self_cycles,
        teammate_cycles=teammate_cycles,
        opponent_cycles=opponent_cycles,
        fastest_teammate=argmin_unum(teammate_cycles),
        fastest_opponent=argmin_unum(opponent_cycles),
    )
