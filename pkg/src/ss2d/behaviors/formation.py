"""Static formation tables.

A formation maps uniform number to a home position in left-team
coordinates (own goal at negative x).  Right-side teams mirror x.
The file format is eleven lines of "unum x y"; blank lines and lines
starting with # are skipped.
"""

from __future__ import annotations

from ..geom import Vector2D

# 4-3-3: goalkeeper, back four, midfield three, front three
FORMATION_433: dict[int, tuple[float, float]] = {
    1: (-50.0, 0.0),
    2: (-36.0, -17.0),
    3: (-38.0, -6.0),
    4: (-38.0, 6.0),
    5: (-36.0, 17.0),
    6: (-20.0, 0.0),
    7: (-16.0, -12.0),
    8: (-16.0, 12.0),
    9: (-4.0, -20.0),
    10: (-2.0, 0.0),
    11: (-4.0, 20.0),
}


def load_formation(path: str) -> dict[int, tuple[float, float]]:
    table: dict[int, tuple[float, float]] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 3:
                raise ValueError(
                    f"{path}:{lineno}: expected 'unum x y', got {line!r}")
            try:
                unum = int(fields[0])
                x, y = float(fields[1]), float(fields[2])
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: bad number in {line!r}") from None
            if not 1 <= unum <= 11:
                raise ValueError(f"{path}:{lineno}: unum {unum} out of range")
            if unum in table:
                raise ValueError(f"{path}:{lineno}: duplicate unum {unum}")
            table[unum] = (x, y)
    if len(table) != 11:
        missing = sorted(set(range(1, 12)) - set(table))
        raise ValueError(f"{path}: missing entries for unums {missing}")
    return table


def save_formation(path: str, table: dict[int, tuple[float, float]]) -> None:
    with open(path, "w") as fh:
        for unum in sorted(table):
            x, y = table[unum]
            fh.write(f"{unum} {x} {y}\n")


def home_position(formation: dict[int, tuple[float, float]], unum: int,
                  side: str) -> Vector2D:
    """Home point for one player, mirrored for the right team."""
    x, y = formation[unum]
    return Vector2D(-x, y) if side == "r" else Vector2D(x, y)
