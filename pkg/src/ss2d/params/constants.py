"""Canonical default simulation constants, all in one auditable place.

These mirror the public rcssserver defaults.  Anything the handshake or
a config file does not override comes from here.  Distances are meters,
angles degrees, speeds meters per cycle, times cycles unless a name
says otherwise.
"""

from __future__ import annotations

# typed fields of ServerParamSet
SERVER_DEFAULTS: dict[str, float | int] = {
    "ball_decay": 0.94,
    "ball_speed_max": 3.0,
    "player_decay": 0.4,
    "player_speed_max": 1.05,
    "dash_power_rate": 0.006,
    "kick_power_rate": 0.027,
    "kickable_margin": 0.7,
    "player_size": 0.3,
    "ball_size": 0.085,
    "catchable_area_l": 1.2,
    "catchable_area_w": 1.0,
    "stamina_max": 8000.0,
    "stamina_inc_max": 45.0,
    "half_time_cycles": 3000,
    "simulator_step_ms": 100,
    "visible_angle": 90.0,
    "quantize_step": 0.1,
    "goal_width": 14.02,
    "pitch_length": 105.0,
    "pitch_width": 68.0,
    "player_port": 6000,
    "trainer_port": 6001,
    "coach_port": 6002,
}

# additional knobs consumed by the world model and the harness; these
# ride in the extras map so the typed surface stays small
EXTRA_DEFAULTS: dict[str, float] = {
    "inertia_moment": 5.0,
    "player_accel_max": 1.0,
    "ball_accel_max": 2.7,
    "minpower": -100.0,
    "maxpower": 100.0,
    "minmoment": -180.0,
    "maxmoment": 180.0,
    "max_neck_angle": 90.0,
    "min_neck_angle": -90.0,
    "visible_distance": 3.0,
    "quantize_step_l": 0.01,
    "unum_far_length": 20.0,
    "unum_too_far_length": 40.0,
    "team_far_length": 40.0,
    "team_too_far_length": 60.0,
    "catch_ban_cycle": 5.0,
    "corner_kick_margin": 1.0,
    "effort_init": 1.0,
    "recover_init": 1.0,
}

INTEGER_FIELDS = ("half_time_cycles", "simulator_step_ms",
                  "player_port", "trainer_port", "coach_port")
