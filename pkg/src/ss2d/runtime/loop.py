"""The per-cycle decide-and-send loop."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from ..protocol import PlayModeChangeMsg, SenseBodyMsg, parse_message
from ..worldmodel import WorldModel
from .logger import AgentLogger, world_snapshot
from .roles import BudgetError, command_summary, drop_body, validate_outcome
from .session import Session
from .timer import SynchronousTimer

log = logging.getLogger("ss2d.runtime")

RECV_POLL_S = 0.2
SILENT_LIMIT_S = 6.0


@dataclass
class ExitReport:
    cycles: int = 0
    commands_sent: int = 0
    deadline_misses: int = 0
    decide_errors: int = 0
    reconnects: int = 0
    clean: bool = False
    final_mode: str | None = None
    side: str | None = None
    unum: int | None = None
    counters: dict = field(default_factory=dict)


def run_match_loop(session: Session, world: WorldModel, decide,
                   logger: AgentLogger | None = None,
                   share=None,
                   max_cycles: int | None = None,
                   snapshot_every: int = 0,
                   silent_limit_s: float = SILENT_LIMIT_S) -> ExitReport:
    """Drive one agent until time_over, shutdown, or a dead server.

    `decide` is called once per cycle with the world; its outcome is
    budget validated, then sent, followed by (done) in lockstep mode.
    A decide() exception skips the cycle and the loop keeps going.
    """
    config = session.config
    report = ExitReport(side=session.side, unum=session.unum)
    if logger is None:
        logger = AgentLogger(None)
    timer = SynchronousTimer(lockstep=config.lockstep,
                             step_ms=world.params.simulator_step_ms)
    skip_see = world.mode == "fullstate"
    last_rx = time.monotonic()
    time_over = False

    while True:
        try:
            data = session.recv_raw(RECV_POLL_S)
        except OSError as exc:
            log.warning("socket failure: %s; reconnecting once", exc)
            if report.reconnects == 0 and session.reconnect():
                report.reconnects = 1
                last_rx = time.monotonic()
                continue
            logger.log(world.current_cycle, "ERROR", "net",
                       f"socket failure: {exc}")
            break

        if data is None:
            if time.monotonic() - last_rx > silent_limit_s:
                logger.log(world.current_cycle, "ERROR", "net",
                           "server silent; giving up")
                break
            continue
        last_rx = time.monotonic()

        if skip_see and data.startswith(b"(see "):
            continue
        msg = parse_message(data)
        world.update(msg)

        if isinstance(msg, PlayModeChangeMsg) and msg.mode == "time_over":
            time_over = True
            report.clean = True
            break

        if not isinstance(msg, SenseBodyMsg):
            continue
        tick = timer.on_sense(msg.time, last_rx)
        if tick is None:
            continue
        report.cycles += 1

        if tick.deadline is not None:
            delay = tick.decide_at - time.monotonic()
            if delay > 0:
                time.sleep(delay)

        try:
            outcome = decide(world)
            commands = validate_outcome(config.role, outcome)
        except BudgetError as exc:
            report.decide_errors += 1
            logger.log(msg.time, "ERROR", "decide", f"budget: {exc}")
            commands = []
        except Exception as exc:  # containment: one bad cycle, not a crash
            report.decide_errors += 1
            logger.log(msg.time, "ERROR", "decide", f"{type(exc).__name__}: {exc}")
            commands = []

        if tick.deadline is not None and time.monotonic() > tick.deadline:
            report.deadline_misses += 1
            logger.log(msg.time, "WARN", "timer", "deadline missed")
            commands = drop_body(commands)

        for command in commands:
            session.send_command(command)
            report.commands_sent += 1
            logger.log(msg.time, "INFO", "decide", command_summary(command))
        if config.lockstep:
            session.send("(done)")

        if snapshot_every and report.cycles % snapshot_every == 0:
            logger.snapshot(msg.time, world_snapshot(world))
        if share is not None and session.unum is not None:
            share.put(f"world/{session.unum}", world_snapshot(world), msg.time)

        if max_cycles is not None and report.cycles >= max_cycles:
            report.clean = True
            break

    report.final_mode = world.play_mode if not time_over else "time_over"
    report.counters = {
        "cycles": report.cycles,
        "commands_sent": report.commands_sent,
        "deadline_misses": report.deadline_misses,
        "decide_errors": report.decide_errors,
    }
    logger.log(world.current_cycle, "INFO", "exit",
               f"cycles={report.cycles} commands={report.commands_sent} "
               f"misses={report.deadline_misses} errors={report.decide_errors} "
               f"clean={int(report.clean)}")
    logger.close()
    session.close()
    return report


def connect_and_run(config, decide, params=None, logger=None, share=None,
                    max_cycles=None) -> ExitReport:
    """Convenience: connect, build the world, run the loop."""
    from ..params import defaults

    session = Session(config).connect()
    world = WorldModel(params=params if params is not None else defaults(),
                       mode=config.mode,
                       side=session.side,
                       unum=session.unum,
                       team_name=config.team_name)
    if session.playmode:
        world.play_mode = session.playmode
    return run_match_loop(session, world, decide, logger=logger,
                          share=share, max_cycles=max_cycles)
