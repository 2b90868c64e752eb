"""Deterministic observation noise.

The harness never perturbs values randomly by default; noisy mode is the
server's quantization scheme, which is a pure function of the true value.
That keeps noisy-mode tests checkable against exact expected bounds.  A
uniform random hook exists for experiments but stays at 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MODES = ("exact", "quantized")


@dataclass(frozen=True, slots=True)
class NoiseModel:
    mode: str = "quantized"
    quantize_step: float = 0.1
    quantize_step_l: float = 0.01
    random_component: float = 0.0

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.quantize_step <= 0 or self.quantize_step_l <= 0:
            raise ValueError("quantize steps must be positive")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"


def round_to(value: float, step: float) -> float:
    return round(value / step) * step


def quantize_dist(dist: float, step: float, outer: float) -> float:
    """Two-stage distance quantization: log-domain rounding by `step`,
    then linear rounding of the result by `outer`."""
    return round_to(math.exp(round_to(math.log(max(dist, 0.1)), step)), outer)


def quantize_dist_movable(dist: float, noise: NoiseModel) -> float:
    return quantize_dist(dist, noise.quantize_step, 0.1)


def quantize_dist_landmark(dist: float, noise: NoiseModel) -> float:
    # landmarks carry the fine step so self-localization stays metric-accurate
    return quantize_dist(dist, noise.quantize_step_l, 0.01)


def quantize_dir(direction: float) -> int:
    return int(round(direction))
