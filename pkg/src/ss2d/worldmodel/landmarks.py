"""Fixed pitch landmark table: 53 flags, 2 goals, 4 boundary lines.

Identifiers match the wire names with spaces ("f c t", "g l", "l r").
Coordinates follow the global frame: x toward the right goal, y down
toward the bottom touchline, origin at the pitch center.  Outer flags
sit 5 m outside the lines; penalty marks use the FIFA box (16.5 deep,
40.32 wide).
"""

from __future__ import annotations

from ..geom import Vector2D
from ..params import ServerParamSet

PENALTY_DEPTH = 16.5
PENALTY_HALF_WIDTH = 20.16
OUTER_MARGIN = 5.0


def landmark_table(params: ServerParamSet) -> dict[str, Vector2D]:
    hl = params.pitch_half_length
    hw = params.pitch_half_width
    post = params.goal_width / 2
    px = hl - PENALTY_DEPTH
    py = PENALTY_HALF_WIDTH
    oy = hw + OUTER_MARGIN
    ox = hl + OUTER_MARGIN

    table: dict[str, Vector2D] = {
        "g l": Vector2D(-hl, 0.0),
        "g r": Vector2D(hl, 0.0),
        "f c": Vector2D(0.0, 0.0),
        "f c t": Vector2D(0.0, -hw),
        "f c b": Vector2D(0.0, hw),
        "f l t": Vector2D(-hl, -hw),
        "f l b": Vector2D(-hl, hw),
        "f r t": Vector2D(hl, -hw),
        "f r b": Vector2D(hl, hw),
        "f g l t": Vector2D(-hl, -post),
        "f g l b": Vector2D(-hl, post),
        "f g r t": Vector2D(hl, -post),
        "f g r b": Vector2D(hl, post),
        "f p l t": Vector2D(-px, -py),
        "f p l c": Vector2D(-px, 0.0),
        "f p l b": Vector2D(-px, py),
        "f p r t": Vector2D(px, -py),
        "f p r c": Vector2D(px, 0.0),
        "f p r b": Vector2D(px, py),
        "f t 0": Vector2D(0.0, -oy),
        "f b 0": Vector2D(0.0, oy),
        "f l 0": Vector2D(-ox, 0.0),
        "f r 0": Vector2D(ox, 0.0),
    }
    for d in (10, 20, 30, 40, 50):
        table[f"f t l {d}"] = Vector2D(-d, -oy)
        table[f"f t r {d}"] = Vector2D(d, -oy)
        table[f"f b l {d}"] = Vector2D(-d, oy)
        table[f"f b r {d}"] = Vector2D(d, oy)
    for d in (10, 20, 30):
        table[f"f l t {d}"] = Vector2D(-ox, -d)
        table[f"f l b {d}"] = Vector2D(-ox, d)
        table[f"f r t {d}"] = Vector2D(ox, -d)
        table[f"f r b {d}"] = Vector2D(ox, d)
    return table


def line_table(params: ServerParamSet) -> dict[str, tuple[float, str, float]]:
    """id -> (axis direction deg, fixed axis 'x'|'y', coordinate)."""
    hl = params.pitch_half_length
    hw = params.pitch_half_width
    return {
        "l l": (90.0, "x", -hl),
        "l r": (90.0, "x", hl),
        "l t": (0.0, "y", -hw),
        "l b": (0.0, "y", hw),
    }
