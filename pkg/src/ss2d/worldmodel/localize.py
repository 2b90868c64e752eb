"""Self-localization and object globalization.

Face recovery order: a seen boundary line pins the gaze angle directly
(most accurate at range); otherwise any two flags do, via the rotation
identity  g2 - g1 = R(face) * (rel2 - rel1)  where rel_i is the flag
offset in the gaze frame.  Position is then the weighted average of
per-landmark back-projections, near landmarks weighted up because the
distance quantization is multiplicative.
"""

from __future__ import annotations

import math

from ..geom import AngleDeg, Vector2D, normalize_angle
from ..params import ServerParamSet
from ..protocol import BodyState, SeeMsg, SeenObject
from .landmarks import landmark_table, line_table
from .state import SelfState


def fold_line_angle(degrees: float) -> float:
    """Fold an angle into (-90, 90]: lines have no arrow head."""
    d = normalize_angle(degrees)
    if d > 90.0:
        d -= 180.0
    elif d <= -90.0:
        d += 180.0
    return d


def line_relative_dir(line_axis: float, face: float) -> float:
    """What the observer reports for a line given a global gaze angle."""
    return fold_line_angle(line_axis - face)


def face_from_line(obs: SeenObject, params: ServerParamSet,
                   position_hint: Vector2D) -> float | None:
    """Invert line_relative_dir; the hint picks between the two folds.

    The reporting rule guarantees the observer was facing toward the
    line, so of the two candidates face and face+180 we keep the one
    whose ray from the hint position moves toward the line.
    """
    lines = line_table(params)
    if obs.ident not in lines or obs.direction is None:
        return None
    axis, fixed_axis, coordinate = lines[obs.ident]
    candidate = normalize_angle(axis - obs.direction)
    for face in (candidate, normalize_angle(candidate + 180.0)):
        heading = Vector2D.from_polar(1.0, AngleDeg(face))
        if fixed_axis == "x":
            toward = coordinate - position_hint.x
            component = heading.x
        else:
            toward = coordinate - position_hint.y
            component = heading.y
        if component * toward > 0.0:
            return face
    return None


def face_from_flags(a: SeenObject, b: SeenObject,
                    table: dict[str, Vector2D]) -> float | None:
    """Gaze angle from two distance+direction landmark sightings."""
    if (a.distance is None or b.distance is None
            or a.direction is None or b.direction is None):
        return None
    ga = table.get(a.ident)
    gb = table.get(b.ident)
    if ga is None or gb is None:
        return None
    rel_a = Vector2D.from_polar(a.distance, AngleDeg(a.direction))
    rel_b = Vector2D.from_polar(b.distance, AngleDeg(b.direction))
    diff_rel = rel_b - rel_a
    diff_global = gb - ga
    if diff_rel.norm() < 1e-6 or diff_global.norm() < 1e-6:
        return None
    return normalize_angle(float(diff_global.th()) - float(diff_rel.th()))


def _landmark_weight(distance: float) -> float:
    return 1.0 / max(distance, 1.0) ** 2


def localize_self(see: SeeMsg, body: BodyState, params: ServerParamSet,
                  previous: SelfState) -> SelfState | None:
    """Full position/face estimate from one see message.

    Returns None when no landmark carries distance+direction; the
    caller then keeps dead reckoning and decays confidence.
    """
    table = landmark_table(params)
    flags = [o for o in see.objects
             if o.kind in ("flag", "goal") and o.ident in table
             and o.distance is not None and o.direction is not None]
    if not flags:
        return None

    face: float | None = None
    line_obs = [o for o in see.objects if o.kind == "line"
                and o.direction is not None]
    if line_obs:
        face = face_from_line(line_obs[0], params, previous.position)
    if face is None and len(flags) >= 2:
        # the most separated pair in the gaze frame is best conditioned
        best_pair = None
        best_sep = 0.0
        for i in range(len(flags)):
            for j in range(i + 1, len(flags)):
                rel_i = Vector2D.from_polar(flags[i].distance, AngleDeg(flags[i].direction))
                rel_j = Vector2D.from_polar(flags[j].distance, AngleDeg(flags[j].direction))
                sep = (rel_j - rel_i).norm()
                if sep > best_sep:
                    best_sep = sep
                    best_pair = (flags[i], flags[j])
        if best_pair is not None:
            face = face_from_flags(best_pair[0], best_pair[1], table)
    if face is None:
        # single flag, no line: keep the dead-reckoned gaze
        face = float(previous.face_direction)

    weight_sum = 0.0
    acc = Vector2D(0.0, 0.0)
    for obs in flags:
        estimate = table[obs.ident] - Vector2D.from_polar(
            obs.distance, AngleDeg(face + obs.direction))
        w = _landmark_weight(obs.distance)
        acc = acc + estimate * w
        weight_sum += w
    position = acc * (1.0 / weight_sum)

    neck = float(body.neck_direction)
    velocity = Vector2D.from_polar(
        body.speed_magnitude, AngleDeg(face + body.speed_direction))
    return SelfState(
        position=position,
        velocity=velocity,
        body_direction=AngleDeg(face - neck),
        neck_direction=AngleDeg(neck),
        stamina=body.stamina,
        position_confidence=1.0,
        last_update_cycle=see.time,
    )


def globalize_position(self_state: SelfState, obs: SeenObject) -> Vector2D:
    """Relative polar sighting to a global position."""
    angle = self_state.face_direction + AngleDeg(obs.direction)
    return self_state.position + Vector2D.from_polar(obs.distance, angle)


def globalize_velocity(self_state: SelfState, obs: SeenObject) -> Vector2D | None:
    """Invert dist_change/dir_change into a global velocity.

    The reported changes decompose the relative velocity into a radial
    part (dist_change) and a tangential part (dir_change, deg/cycle,
    scaled by distance); adding the observer's own velocity restores
    the global vector.
    """
    if obs.dist_change is None or obs.dir_change is None or obs.distance is None:
        return None
    radial = Vector2D.from_polar(1.0, self_state.face_direction + AngleDeg(obs.direction))
    tangential = radial.rotate(AngleDeg(90.0))
    relative = (radial * obs.dist_change
                + tangential * (math.radians(obs.dir_change) * obs.distance))
    return relative + self_state.velocity
