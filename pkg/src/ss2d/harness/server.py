"""UDP front end and match driver.

The harness is single threaded: one selector over the three role ports,
one MatchState.  Receivers never touch state concurrently; datagrams are
parsed and queued as (slot, command) pairs, and the simulation context
applies them at the step boundary.  In lockstep mode the step waits until
every agent that received the last broadcast has sent (done), or until
`release()` is called by an embedding test.
"""

from __future__ import annotations

import logging
import selectors
import socket
import threading
import time
from dataclasses import dataclass, field

from ..params import ServerParamSet, default_player_types, defaults
from ..protocol import (
    Bye,
    Done,
    InitCommand,
    Say,
    TRAINER_COMMANDS,
    parse_command,
)
from ..worldmodel import landmark_table
from .noise import NoiseModel
from .observe import build_fullstate, build_see, build_sense_body
from .state import MatchState, new_match_state, slot_index
from .step import TRAINER_SLOT, protocol_violations, step

log = logging.getLogger("ss2d.harness")

ERROR_NO_MORE = "(error no_more_team_or_player_or_goalie)"

OBSERVATION_MODES = ("exact", "quantized", "fullstate")


@dataclass
class HarnessConfig:
    cycles: int = 6000
    lockstep: bool = True
    seed: int = 0
    mode: str = "fullstate"
    log_path: str | None = None
    host: str = "127.0.0.1"
    player_port: int | None = None
    coach_port: int | None = None
    trainer_port: int | None = None
    grace_s: float = 5.0
    start_timeout_s: float = 60.0
    lockstep_timeout_s: float = 10.0
    auto_kickoff: bool = True
    allow_no_agents: bool = False
    start_event: threading.Event | None = None

    def __post_init__(self) -> None:
        if self.mode not in OBSERVATION_MODES:
            raise ValueError(f"mode must be one of {OBSERVATION_MODES}")


@dataclass
class AgentConn:
    role: str                       # player | coach | trainer
    addr: tuple[str, int]
    sock: socket.socket
    slot: int | None = None         # player slot index
    side: str | None = None
    team: str = ""
    connected: bool = True
    awaiting_done: bool = False
    done: bool = False


@dataclass
class _Pending:
    commands: dict[int, list] = field(default_factory=dict)

    def add(self, slot: int, cmd) -> None:
        self.commands.setdefault(slot, []).append(cmd)

    def clear(self) -> None:
        self.commands.clear()


class HarnessServer:
    """Owns the sockets and the match state for one match."""

    def __init__(self, params: ServerParamSet, config: HarnessConfig):
        self.params = params
        self.config = config
        self.state: MatchState = new_match_state(params, config.seed)
        self.noise = NoiseModel(
            mode="quantized" if config.mode == "quantized" else "exact")
        self.send_fullstate = config.mode == "fullstate"

        self.conns: dict[tuple[str, int], AgentConn] = {}
        self.teams: dict[str, str] = {}        # team name -> side
        self.team_counts = {"l": 0, "r": 0}
        self.goalies: set[str] = set()
        self.coach_sides: set[str] = set()
        self.has_trainer = False
        self.started = False
        self.aborted = False

        self._pending = _Pending()
        self._release = threading.Event()
        self._stop = threading.Event()
        self._landmarks = sorted(
            (ident, coords)
            for ident, coords in landmark_table(params).items())

        self._selector = selectors.DefaultSelector()
        self._socks: dict[str, socket.socket] = {}
        for role, port in (
            ("player", config.player_port
             if config.player_port is not None else params.player_port),
            ("coach", config.coach_port
             if config.coach_port is not None else params.coach_port),
            ("trainer", config.trainer_port
             if config.trainer_port is not None else params.trainer_port),
        ):
            sock = socket.socket(socket.AF_INET, socket.SOCK_DGRAM)
            sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
            try:
                sock.setsockopt(socket.SOL_SOCKET, socket.SO_RCVBUF, 1 << 20)
            except OSError:
                pass
            sock.bind((config.host, port))
            sock.setblocking(False)
            self._socks[role] = sock
            self._selector.register(sock, selectors.EVENT_READ, role)

    # actual bound ports (useful when configured with port 0)
    @property
    def player_port(self) -> int:
        return self._socks["player"].getsockname()[1]

    @property
    def coach_port(self) -> int:
        return self._socks["coach"].getsockname()[1]

    @property
    def trainer_port(self) -> int:
        return self._socks["trainer"].getsockname()[1]

    def release(self) -> None:
        """Let the current lockstep cycle proceed without waiting."""
        self._release.set()

    def stop(self) -> None:
        self._stop.set()

    def close(self) -> None:
        for sock in self._socks.values():
            self._selector.unregister(sock)
            sock.close()
        self._selector.close()

    # ------------------------------------------------------------------
    # connection handling

    def accept_and_assign(self, cmd: InitCommand, addr: tuple[str, int],
                          role: str) -> str:
        """Process an init on one of the role ports; returns the reply."""
        existing = self.conns.get(addr)
        if existing is not None:
            return self._init_reply(existing)

        sock = self._socks[role]
        if role == "trainer":
            if self.has_trainer:
                return ERROR_NO_MORE
            self.has_trainer = True
            conn = AgentConn(role="trainer", addr=addr, sock=sock,
                             slot=TRAINER_SLOT, team=cmd.team_name)
            self.conns[addr] = conn
            return self._init_reply(conn)

        if role == "coach":
            side = self.teams.get(cmd.team_name)
            if side is None:
                side = "l" if "l" not in self.coach_sides else "r"
            if side in self.coach_sides:
                return ERROR_NO_MORE
            self.coach_sides.add(side)
            conn = AgentConn(role="coach", addr=addr, sock=sock,
                             side=side, team=cmd.team_name)
            self.conns[addr] = conn
            return self._init_reply(conn)

        side = self.teams.get(cmd.team_name)
        if side is None:
            if "l" not in self.teams.values():
                side = "l"
            elif "r" not in self.teams.values():
                side = "r"
            else:
                return ERROR_NO_MORE
            self.teams[cmd.team_name] = side
        if self.team_counts[side] >= 11:
            return ERROR_NO_MORE
        if cmd.goalie and side in self.goalies:
            return ERROR_NO_MORE

        unum = self.team_counts[side] + 1
        self.team_counts[side] = unum
        if cmd.goalie:
            self.goalies.add(side)
        slot = slot_index(side, unum)
        player = self.state.players[slot]
        player.connected = True
        player.goalie = cmd.goalie
        player.team_name = cmd.team_name
        conn = AgentConn(role="player", addr=addr, sock=sock,
                         slot=slot, side=side, team=cmd.team_name)
        self.conns[addr] = conn
        return self._init_reply(conn)

    def _init_reply(self, conn: AgentConn) -> str:
        if conn.role == "trainer":
            return "(init ok)"
        if conn.role == "coach":
            return f"(init {conn.side} ok)"
        player = self.state.players[conn.slot]
        return f"(init {player.side} {player.unum} {self.state.play_mode})"

    def _send(self, conn: AgentConn, text: str) -> None:
        try:
            conn.sock.sendto(text.encode("ascii"), conn.addr)
        except OSError as exc:
            log.warning("send to %s failed: %s", conn.addr, exc)

    def _send_param_blocks(self, conn: AgentConn) -> None:
        self._send(conn, self.params.serialize())
        self._send(conn, "(player_param (player_types 1) (subs_max 0))")
        for ptype in default_player_types(self.params).types:
            values = {
                "player_speed_max": ptype.player_speed_max,
                "stamina_inc_max": ptype.stamina_inc_max,
                "player_decay": ptype.player_decay,
                "kickable_margin": ptype.kickable_margin,
                "dash_power_rate": ptype.dash_power_rate,
                "player_size": ptype.player_size,
            }
            values.update(ptype.extras)
            fields = " ".join(f"({k} {v!r})" for k, v in sorted(values.items()))
            self._send(conn, f"(player_type (id {ptype.type_id}) {fields})")

    # ------------------------------------------------------------------
    # datagram processing

    def _drain_sockets(self) -> None:
        for key, _ in self._selector.select(timeout=0):
            self._drain_one(key.fileobj, key.data)

    def _poll(self, timeout: float) -> None:
        for key, _ in self._selector.select(timeout=timeout):
            self._drain_one(key.fileobj, key.data)

    def _drain_one(self, sock: socket.socket, role: str) -> None:
        while True:
            try:
                data, addr = sock.recvfrom(8192)
            except (BlockingIOError, InterruptedError):
                return
            except OSError:
                return
            self._handle_datagram(data, addr, role)

    def _handle_datagram(self, data: bytes, addr: tuple[str, int],
                         role: str) -> None:
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError:
            self.state.count("invalid")
            return
        cmd = parse_command(text)
        if cmd is None:
            self.state.count("invalid")
            return

        if isinstance(cmd, InitCommand):
            reply = self.accept_and_assign(cmd, addr, role)
            conn = self.conns.get(addr)
            if conn is not None:
                self._send(conn, reply)
                if not reply.startswith("(error"):
                    self._send_param_blocks(conn)
            else:
                self._socks[role].sendto(reply.encode("ascii"), addr)
            return

        conn = self.conns.get(addr)
        if conn is None or not conn.connected:
            self.state.count("disconnected")
            return

        if isinstance(cmd, Done):
            conn.done = True
            return
        if isinstance(cmd, Bye):
            conn.connected = False
            conn.awaiting_done = False
            if conn.role == "player":
                self.state.players[conn.slot].connected = False
            return

        if conn.role == "player":
            self._pending.add(conn.slot, cmd)
        elif conn.role == "trainer":
            if isinstance(cmd, TRAINER_COMMANDS):
                self._pending.add(TRAINER_SLOT, cmd)
            else:
                self.state.count("role")
        else:  # coach: advice channel only in this subset
            if not isinstance(cmd, Say):
                self.state.count("role")

    # ------------------------------------------------------------------
    # match driving

    def _live_conns(self) -> list[AgentConn]:
        return [c for c in self.conns.values() if c.connected]

    def broadcast(self, announcements: list[str], says) -> None:
        state = self.state
        cycle = state.cycle
        fullstate_text = None
        if self.send_fullstate or any(
                c.role in ("coach", "trainer") for c in self.conns.values()):
            fullstate_text = build_fullstate(state)

        say_by_slot = {}
        for event in says:
            say_by_slot.setdefault(event.slot, []).append(event.text)

        for conn in self._live_conns():
            for ann in announcements:
                self._send(conn, f"(hear {cycle} referee {ann})")
            for event in says:
                if conn.role == "player" and conn.slot == event.slot:
                    self._send(conn, f'(hear {cycle} self "{event.text}")')
                else:
                    direction = 0
                    if conn.role == "player":
                        me = state.players[conn.slot]
                        rel = state.players[event.slot].position - me.position
                        direction = int(round(float(rel.th())))
                    self._send(conn, f'(hear {cycle} {direction} "{event.text}")')

            if conn.role == "player":
                player = state.players[conn.slot]
                self._send(conn, build_see(state, conn.slot, self.noise,
                                           player.view_width,
                                           self._landmarks))
                if self.send_fullstate:
                    self._send(conn, fullstate_text)
                self._send(conn, build_sense_body(state, conn.slot,
                                                  player.view_width))
            else:
                self._send(conn, fullstate_text)
                self._send(conn, f"(sense_body {cycle} (view_mode high normal) "
                                 f"(stamina 0 1 1) (speed 0 0) (head_angle 0))")
            conn.awaiting_done = True
            conn.done = False

    def _wait_for_start(self) -> bool:
        config = self.config
        deadline = time.monotonic() + (
            config.start_timeout_s if config.start_event is not None
            else config.grace_s)
        while not self._stop.is_set():
            self._poll(0.05)
            if config.start_event is not None and config.start_event.is_set():
                return True
            if time.monotonic() >= deadline:
                break
        if config.start_event is not None and not config.start_event.is_set():
            return False
        return bool(self.conns) or config.allow_no_agents

    def _collect_lockstep(self) -> None:
        deadline = time.monotonic() + self.config.lockstep_timeout_s
        while not self._stop.is_set():
            waiting = [c for c in self._live_conns()
                       if c.awaiting_done and not c.done]
            if not waiting:
                return
            if self._release.is_set():
                self._release.clear()
                return
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                self.state.count("lockstep_timeout")
                log.warning("lockstep timeout at cycle %d; %d agents silent",
                            self.state.cycle, len(waiting))
                return
            self._poll(min(remaining, 0.05))

    def _collect_wallclock(self, cycle_start: float) -> None:
        step_s = self.params.simulator_step_ms / 1000.0
        deadline = cycle_start + step_s
        while not self._stop.is_set():
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                return
            self._poll(min(remaining, 0.01))

    def run_headless(self) -> dict:
        """Drive the whole match; returns the final report."""
        config = self.config
        state = self.state

        if not self._wait_for_start():
            self.aborted = True
            log.warning("no agents connected after grace period; aborting")
            return self.report()

        self.started = True
        log_file = open(config.log_path, "w") if config.log_path else None
        try:
            self.broadcast([state.play_mode], [])
            cycle_start = time.monotonic()
            while (state.cycle < config.cycles
                   and state.play_mode != "time_over"
                   and not self._stop.is_set()):
                if config.lockstep:
                    self._collect_lockstep()
                else:
                    self._collect_wallclock(cycle_start)
                cycle_start = time.monotonic()
                commands = self._pending.commands
                announcements, says = step(state, commands,
                                           config.auto_kickoff)
                self._pending.clear()
                if (state.cycle >= config.cycles
                        and state.play_mode != "time_over"):
                    # the requested budget ends the match early; announce
                    # it in the final broadcast so agents exit before
                    # ticking on that cycle's sense_body
                    state.set_mode("time_over")
                    announcements.append("time_over")
                if log_file is not None:
                    log_file.write(match_log_line(state))
                self.broadcast(announcements, says)
            if state.play_mode != "time_over":
                # stop() path: wire-level end marker so agents still
                # shut down cleanly
                for conn in self._live_conns():
                    self._send(conn, f"(hear {state.cycle} referee time_over)")
        finally:
            if log_file is not None:
                log_file.close()
        return self.report()

    def report(self) -> dict:
        state = self.state
        counters = dict(state.counters)
        stats: dict[str, dict[str, int]] = {"l": {}, "r": {}, "trainer": {}}
        for key, value in counters.items():
            if not key.startswith("cmd_"):
                continue
            name, _, owner = key[4:].rpartition("_")
            owner = {"l": "l", "r": "r", "t": "trainer"}.get(owner)
            if owner is not None:
                stats[owner][name] = value
        violations = {k: v for k, v in counters.items()
                      if not k.startswith("cmd_")}
        return {
            "score_l": state.score_l,
            "score_r": state.score_r,
            "cycles": state.cycle,
            "play_mode": state.play_mode,
            "violations": violations,
            "protocol_violations": protocol_violations(counters),
            "command_stats": stats,
            "teams": dict(self.teams),
            "connected_players": sum(
                1 for c in self._live_conns() if c.role == "player"),
            "seed": self.config.seed,
            "mode": self.config.mode,
            "lockstep": self.config.lockstep,
            "aborted": self.aborted,
            "log_path": self.config.log_path,
        }


def match_log_line(state: MatchState) -> str:
    """One line per cycle: cycle, ball, 22 poses, score, mode."""
    ball = state.ball
    parts = [str(state.cycle),
             repr(ball.position.x), repr(ball.position.y),
             repr(ball.velocity.x), repr(ball.velocity.y)]
    for player in state.players:
        parts.append(repr(player.position.x))
        parts.append(repr(player.position.y))
        parts.append(repr(player.body_dir))
    parts.append(str(state.score_l))
    parts.append(str(state.score_r))
    parts.append(state.play_mode)
    return " ".join(parts) + "\n"


def run_headless(config: HarnessConfig,
                 params: ServerParamSet | None = None) -> dict:
    """Convenience wrapper: build a server, run the match, close sockets."""
    if params is None:
        params = defaults()
    server = HarnessServer(params, config)
    try:
        return server.run_headless()
    finally:
        server.close()
