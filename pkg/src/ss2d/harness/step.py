"""One simulation step: apply commands, integrate, referee.

Mode graph (referee transitions only; the trainer may force any mode):

    before_kick_off -> kick_off_l                      (auto start)
    kick_off_l/r    -> play_on                         (ball kicked, or idle release)
    kick_in_l/r     -> play_on                         (ball kicked, or idle release)
    play_on         -> goal_l/r                        (ball fully across goal line)
    play_on         -> kick_in_l/r                     (ball fully out elsewhere)
    goal_l          -> kick_off_r   (and mirrored)     (after a short pause)
    any             -> time_over                       (cycle reaches 2 * half_time)

Goals are only awarded in play_on.  Violation counters are split into
protocol-level keys (budget, disconnected, role, invalid), which a clean
client never triggers, and play-level keys (ineffective_kick, restart,
move_in_play), which merely void the offending command.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

from ..geom import Vector2D, normalize_angle
from ..protocol import (
    Catch,
    ChangeMode,
    ChangeView,
    Command,
    Dash,
    Kick,
    Move,
    MoveBall,
    MovePlayer,
    Say,
    Turn,
    TurnNeck,
    is_body_command,
)
from .state import (
    DEAD_BALL_MODES,
    GOAL_PAUSE_CYCLES,
    RESTART_RELEASE_CYCLES,
    MatchState,
    slot_index,
)

PROTOCOL_VIOLATION_KEYS = ("budget", "disconnected", "role", "invalid")

# 22 player slots, then one pseudo-slot for the trainer
TRAINER_SLOT = 22


def protocol_violations(counters: Mapping[str, int]) -> int:
    return sum(counters.get(k, 0) for k in PROTOCOL_VIOLATION_KEYS)


def restart_side(mode: str) -> str | None:
    """Which side may put the ball in play in a restart mode."""
    if mode in ("kick_off_l", "kick_in_l"):
        return "l"
    if mode in ("kick_off_r", "kick_in_r"):
        return "r"
    return None


class _SayEvent:
    __slots__ = ("slot", "text")

    def __init__(self, slot: int, text: str):
        self.slot = slot
        self.text = text


def step(state: MatchState,
         commands: Mapping[int, Iterable[Command]],
         auto_kickoff: bool = True) -> tuple[list[str], list[_SayEvent]]:
    """Advance the match by one cycle.

    `commands` maps a slot index (0..21, or TRAINER_SLOT) to the commands
    that arrived for it this cycle.  Returns referee announcements (new
    play modes) and say events to relay.
    """
    params = state.params
    announcements: list[str] = []
    says: list[_SayEvent] = []

    if state.play_mode == "time_over":
        state.cycle += 1
        state.mode_age += 1
        return announcements, says

    kickable = params.kickable_area
    ball_accel = Vector2D(0.0, 0.0)
    dash_cost: dict[int, float] = {}

    def announce(mode: str) -> None:
        gl, gr = state.score_l, state.score_r
        if mode == "goal_l":
            announcements.append(f"goal_l_{gl}")
        elif mode == "goal_r":
            announcements.append(f"goal_r_{gr}")
        else:
            announcements.append(mode)

    def change_mode(mode: str) -> None:
        state.set_mode(mode)
        if mode in ("before_kick_off", "kick_off_l", "kick_off_r",
                    "goal_l", "goal_r"):
            state.ball.position = Vector2D(0.0, 0.0)
            state.ball.velocity = Vector2D(0.0, 0.0)
        announce(mode)

    for slot in sorted(commands):
        slot_cmds = list(commands[slot])
        if slot == TRAINER_SLOT:
            _apply_trainer(state, slot_cmds, change_mode)
            continue
        if not 0 <= slot < 22:
            state.count("disconnected", len(slot_cmds))
            continue
        player = state.players[slot]
        if not player.connected:
            state.count("disconnected", len(slot_cmds))
            continue
        body_done = False
        for cmd in slot_cmds:
            if is_body_command(cmd):
                if body_done:
                    state.count("budget")
                    continue
                body_done = True
                accel, cost = _apply_body(state, slot, cmd, kickable)
                if accel is not None:
                    ball_accel = ball_accel + accel
                if cost:
                    dash_cost[slot] = cost
            elif isinstance(cmd, TurnNeck):
                limit = float(params.get("max_neck_angle", 90.0))
                player.neck_dir = max(-limit, min(limit,
                                                  player.neck_dir + cmd.moment))
                state.count(f"cmd_turn_neck_{player.side}")
            elif isinstance(cmd, Say):
                says.append(_SayEvent(slot, cmd.message))
                state.count(f"cmd_say_{player.side}")
            elif isinstance(cmd, ChangeView):
                player.view_width = cmd.width
                state.count(f"cmd_change_view_{player.side}")
            else:
                # trainer-only command on a player slot
                state.count("role")

    # ball dynamics: accumulated kick acceleration, then the speed cap
    if ball_accel.norm_sq() > 0.0:
        vel = state.ball.velocity + ball_accel
        speed = vel.norm()
        if speed > params.ball_speed_max:
            vel = vel * (params.ball_speed_max / speed)
        state.ball.velocity = vel

    # integrate: pos += vel, vel *= decay, for every object
    state.ball.position = state.ball.position + state.ball.velocity
    state.ball.velocity = state.ball.velocity * params.ball_decay
    for player in state.players:
        player.position = player.position + player.velocity
        player.velocity = player.velocity * params.player_decay

    # stamina: spend the dash, then recover, capped at the maximum
    for slot, cost in dash_cost.items():
        state.players[slot].stamina -= cost
    for player in state.players:
        player.stamina = min(player.stamina + params.stamina_inc_max,
                             params.stamina_max)

    _referee(state, auto_kickoff, change_mode)

    state.cycle += 1
    state.mode_age += 1

    if state.cycle >= 2 * params.half_time_cycles and state.play_mode != "time_over":
        state.set_mode("time_over")
        announce("time_over")

    return announcements, says


def _apply_body(state: MatchState, slot: int, cmd: Command,
                kickable: float) -> tuple[Vector2D | None, float]:
    """Apply one body command.  Returns (ball acceleration, stamina cost)."""
    params = state.params
    player = state.players[slot]
    state.count(f"cmd_{type(cmd).__name__.lower()}_{player.side}")

    if isinstance(cmd, Turn):
        speed = player.velocity.norm()
        inertia = float(params.get("inertia_moment", 5.0))
        player.body_dir = normalize_angle(
            player.body_dir + cmd.moment / (1.0 + inertia * speed))
        return None, 0.0

    if isinstance(cmd, Dash):
        power = cmd.power
        # stamina-short dashes are scaled down, never overdrawn
        if abs(power) > player.stamina:
            power = math.copysign(player.stamina, power)
        accel_mag = power * params.dash_power_rate
        accel_max = float(params.get("player_accel_max", 1.0))
        if abs(accel_mag) > accel_max:
            accel_mag = math.copysign(accel_max, accel_mag)
        rad = math.radians(normalize_angle(player.body_dir + cmd.direction))
        vel = player.velocity + Vector2D(accel_mag * math.cos(rad),
                                         accel_mag * math.sin(rad))
        speed = vel.norm()
        if speed > params.player_speed_max:
            vel = vel * (params.player_speed_max / speed)
        player.velocity = vel
        return None, abs(power)

    if isinstance(cmd, Kick):
        side = restart_side(state.play_mode)
        if state.play_mode != "play_on":
            if side is None or side != player.side:
                state.count("restart")
                return None, 0.0
        rel = state.ball.position - player.position
        dist = rel.norm()
        if dist > kickable:
            state.count("ineffective_kick")
            return None, 0.0
        dir_diff = abs(normalize_angle(float(rel.th()) - player.body_dir))
        ball_dist = dist - params.player_size - params.ball_size
        rate = params.kick_power_rate * (
            1.0 - 0.25 * dir_diff / 180.0
            - 0.25 * ball_dist / params.kickable_margin)
        direction = normalize_angle(player.body_dir + cmd.direction)
        state.last_kicker_side = player.side
        return Vector2D.from_polar(cmd.power * rate, direction), 0.0

    if isinstance(cmd, Move):
        if state.play_mode not in DEAD_BALL_MODES:
            state.count("move_in_play")
            return None, 0.0
        player.position = Vector2D(cmd.x, cmd.y)
        player.velocity = Vector2D(0.0, 0.0)
        return None, 0.0

    if isinstance(cmd, Catch):
        # goalie catch is accepted but has no hold model; the kick path
        # is what the sample behaviors use
        if not player.goalie:
            state.count("role")
        return None, 0.0

    state.count("role")
    return None, 0.0


def _apply_trainer(state: MatchState, cmds: Iterable[Command],
                   change_mode) -> None:
    for cmd in cmds:
        if isinstance(cmd, ChangeMode):
            change_mode(cmd.mode)
            state.count("cmd_change_mode_t")
        elif isinstance(cmd, MoveBall):
            state.ball.position = Vector2D(cmd.x, cmd.y)
            if cmd.vx is not None:
                state.ball.velocity = Vector2D(cmd.vx, cmd.vy)
            state.count("cmd_move_ball_t")
        elif isinstance(cmd, MovePlayer):
            try:
                slot = slot_index(cmd.team, cmd.unum)
            except ValueError:
                state.count("invalid")
                continue
            player = state.players[slot]
            player.position = Vector2D(cmd.x, cmd.y)
            player.velocity = Vector2D(0.0, 0.0)
            if cmd.body_dir is not None:
                player.body_dir = normalize_angle(cmd.body_dir)
            state.count("cmd_move_player_t")
        else:
            state.count("role")


def _referee(state: MatchState, auto_kickoff: bool, change_mode) -> None:
    params = state.params
    mode = state.play_mode
    bx, by = state.ball.position.x, state.ball.position.y
    half_len = params.pitch_half_length
    half_wid = params.pitch_half_width

    if mode == "play_on":
        fully_out_x = abs(bx) > half_len + params.ball_size
        fully_out_y = abs(by) > half_wid + params.ball_size
        if fully_out_x and abs(by) < params.goal_width / 2.0:
            if bx > 0:
                state.score_l += 1
                change_mode("goal_l")
            else:
                state.score_r += 1
                change_mode("goal_r")
            return
        if fully_out_x or fully_out_y:
            # throw-in goes against the last toucher; left by default
            award = "l"
            if state.last_kicker_side == "l":
                award = "r"
            state.ball.position = Vector2D(
                max(-half_len, min(half_len, bx)),
                max(-half_wid, min(half_wid, by)))
            state.ball.velocity = Vector2D(0.0, 0.0)
            change_mode(f"kick_in_{award}")
        return

    if mode == "before_kick_off":
        if auto_kickoff and state.mode_age >= 1:
            change_mode("kick_off_l")
        return

    if mode in ("kick_off_l", "kick_off_r", "kick_in_l", "kick_in_r"):
        if state.ball.velocity.norm_sq() > 1e-18:
            change_mode("play_on")
        elif state.mode_age >= RESTART_RELEASE_CYCLES:
            change_mode("play_on")
        return

    if mode in ("goal_l", "goal_r"):
        if state.mode_age >= GOAL_PAUSE_CYCLES:
            change_mode("kick_off_r" if mode == "goal_l" else "kick_off_l")
        return
