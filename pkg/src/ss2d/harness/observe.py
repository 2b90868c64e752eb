"""Render see / sense_body / fullstate messages from ground truth.

All numbers are formatted with repr so exact mode survives a parse round
trip bit for bit.  Quantized mode applies the deterministic rounding
from `noise` before formatting.
"""

from __future__ import annotations

import math

from ..geom import Vector2D, normalize_angle
from ..params import ServerParamSet
from ..worldmodel import fold_line_angle, landmark_table, line_table
from .noise import (
    NoiseModel,
    quantize_dir,
    quantize_dist_landmark,
    quantize_dist_movable,
    round_to,
)
from .state import MatchState, PlayerSlot

VIEW_WIDTH_FACTOR = {"narrow": 0.5, "normal": 1.0, "wide": 2.0}


def _fmt(value: float) -> str:
    return repr(float(value))


def relative_polar(origin: Vector2D, face: float,
                   target: Vector2D) -> tuple[float, float]:
    rel = target - origin
    return rel.norm(), normalize_angle(float(rel.th()) - face)


def motion_changes(self_pos: Vector2D, self_vel: Vector2D,
                   obj_pos: Vector2D, obj_vel: Vector2D) -> tuple[float, float]:
    """(dist_change, dir_change) of a movable as the server reports them."""
    rel = obj_pos - self_pos
    dist = rel.norm()
    if dist < 1e-9:
        return 0.0, 0.0
    erel = rel * (1.0 / dist)
    etan = Vector2D(-erel.y, erel.x)
    rel_vel = obj_vel - self_vel
    dist_change = rel_vel.dot(erel)
    dir_change = math.degrees(rel_vel.dot(etan) / dist)
    return dist_change, dir_change


def _movable_values(dist: float, direction: float, dist_change: float,
                    dir_change: float, noise: NoiseModel) -> str:
    if noise.exact:
        return (f"{_fmt(dist)} {_fmt(direction)} "
                f"{_fmt(dist_change)} {_fmt(dir_change)}")
    return (f"{_fmt(quantize_dist_movable(dist, noise))} "
            f"{quantize_dir(direction)} "
            f"{_fmt(round_to(dist_change, 0.01))} "
            f"{_fmt(round_to(dir_change, 0.1))}")


def _player_name(observer: PlayerSlot, target: PlayerSlot, dist: float,
                 noise: NoiseModel, params: ServerParamSet) -> str:
    if not noise.exact:
        if dist > float(params.get("team_far_length", 40.0)):
            return "p"
        if dist > float(params.get("unum_far_length", 20.0)):
            return f'p "{target.team_name}"'
    name = f'p "{target.team_name}" {target.unum}'
    if target.goalie:
        name += " goalie"
    return name


def build_see(state: MatchState, slot: int, noise: NoiseModel,
              view_width: str = "normal",
              landmarks: list[tuple[str, tuple[float, float]]] | None = None) -> str:
    params = state.params
    me = state.players[slot]
    face = normalize_angle(me.body_dir + me.neck_dir)
    half_cone = params.visible_angle * VIEW_WIDTH_FACTOR[view_width] / 2.0

    if landmarks is None:
        landmarks = sorted(landmark_table(params).items())

    parts: list[str] = [f"(see {state.cycle}"]

    # scalar math in the loops: this renders for every agent every cycle
    mx, my = me.position.x, me.position.y
    for ident, landmark in landmarks:
        dx = landmark.x - mx
        dy = landmark.y - my
        direction = normalize_angle(math.degrees(math.atan2(dy, dx)) - face)
        if abs(direction) > half_cone:
            continue
        dist = math.hypot(dx, dy)
        if noise.exact:
            parts.append(f"(({ident}) {_fmt(dist)} {_fmt(direction)})")
        else:
            parts.append(f"(({ident}) {_fmt(quantize_dist_landmark(dist, noise))} "
                         f"{quantize_dir(direction)})")

    bdist, bdir = relative_polar(me.position, face, state.ball.position)
    if abs(bdir) <= half_cone:
        dch, dirch = motion_changes(me.position, me.velocity,
                                    state.ball.position, state.ball.velocity)
        parts.append(f"((b) {_movable_values(bdist, bdir, dch, dirch, noise)})")

    for index, other in enumerate(state.players):
        if index == slot or not other.connected:
            continue
        dx = other.position.x - mx
        dy = other.position.y - my
        pdir = normalize_angle(math.degrees(math.atan2(dy, dx)) - face)
        if abs(pdir) > half_cone:
            continue
        pdist = math.hypot(dx, dy)
        dch, dirch = motion_changes(me.position, me.velocity,
                                    other.position, other.velocity)
        name = _player_name(me, other, pdist, noise, params)
        parts.append(f"(({name}) {_movable_values(pdist, pdir, dch, dirch, noise)})")

    line = _nearest_line(me.position, face, params, noise)
    if line is not None:
        parts.append(line)

    return " ".join(parts) + ")"


def _nearest_line(pos: Vector2D, face: float, params: ServerParamSet,
                  noise: NoiseModel) -> str | None:
    """The boundary line the face-direction ray hits first."""
    heading = Vector2D.from_polar(1.0, face)
    best = None
    for ident, (axis, coord_name, coord) in line_table(params).items():
        if coord_name == "x":
            component = heading.x
            toward = coord - pos.x
        else:
            component = heading.y
            toward = coord - pos.y
        if component * toward <= 1e-12:
            continue
        t = toward / component
        if t <= 0:
            continue
        if best is None or t < best[0]:
            best = (t, ident, axis)
    if best is None:
        return None
    dist, ident, axis = best
    direction = fold_line_angle(axis - face)
    if noise.exact:
        return f"(({ident}) {_fmt(dist)} {_fmt(direction)})"
    return (f"(({ident}) {_fmt(quantize_dist_landmark(dist, noise))} "
            f"{quantize_dir(direction)})")


def build_sense_body(state: MatchState, slot: int,
                     view_width: str = "normal") -> str:
    me = state.players[slot]
    counters = state.counters
    side = me.side

    speed = round(me.velocity.norm(), 2)
    if speed > 0.0:
        face = normalize_angle(me.body_dir + me.neck_dir)
        speed_dir = normalize_angle(float(me.velocity.th()) - face)
    else:
        speed_dir = 0.0

    def stat(name: str) -> int:
        return counters.get(f"cmd_{name}_{side}", 0)

    return (f"(sense_body {state.cycle} "
            f"(view_mode high {view_width}) "
            f"(stamina {_fmt(me.stamina)} 1 1) "
            f"(speed {_fmt(speed)} {_fmt(speed_dir)}) "
            f"(head_angle {_fmt(me.neck_dir)}) "
            f"(kick {stat('kick')}) (dash {stat('dash')}) "
            f"(turn {stat('turn')}) (say {stat('say')}) "
            f"(turn_neck {stat('turn_neck')}) (catch {stat('catch')}) "
            f"(move {stat('move')}) (change_view {stat('change_view')}))")


def build_fullstate(state: MatchState) -> str:
    """Ground-truth snapshot; identical for every recipient."""
    parts = [f"(fullstate {state.cycle} (pmode {state.play_mode}) "
             f"(score {state.score_l} {state.score_r}) "
             f"(b {_fmt(state.ball.position.x)} {_fmt(state.ball.position.y)} "
             f"{_fmt(state.ball.velocity.x)} {_fmt(state.ball.velocity.y)})"]
    for player in state.players:
        if not player.connected:
            continue
        parts.append(
            f"(p {player.side} {player.unum} 0 "
            f"{_fmt(player.position.x)} {_fmt(player.position.y)} "
            f"{_fmt(player.velocity.x)} {_fmt(player.velocity.y)} "
            f"{_fmt(player.body_dir)} {_fmt(player.neck_dir)} "
            f"{_fmt(player.stamina)})")
    return " ".join(parts) + ")"
