"""Operator entry points.

One multiplexed command with four subcommands: a self-contained match
(embedded harness plus both teams in one process), a team of agents
against an already-running server, a lone trainer, and a standalone
harness serving external agents.
"""

from __future__ import annotations

import argparse
import json
import sys
import threading
from dataclasses import dataclass
from pathlib import Path

from .behaviors import decide_idle, decide_sample, load_formation
from .harness import HarnessConfig, HarnessServer
from .params import defaults
from .runtime import (
    AgentConfig,
    AgentLogger,
    Session,
    ShareChannel,
    run_match_loop,
)
from .worldmodel import WorldModel

BEHAVIOR_NAMES = ("sample", "idle")
JOIN_SLACK_S = 120.0


@dataclass
class TeamPlan:
    name: str
    agents: int = 11
    behavior: str = "sample"
    formation: dict[int, tuple[float, float]] | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.agents <= 11:
            raise ValueError("agents per team must be 1..11")
        if self.behavior not in BEHAVIOR_NAMES:
            raise ValueError(f"behavior must be one of {BEHAVIOR_NAMES}")

    def decider(self):
        if self.behavior == "idle":
            return decide_idle
        formation = self.formation

        def decide(world):
            return decide_sample(world, formation=formation)

        return decide


@dataclass
class LaunchPlan:
    """Everything cmd_match starts, validated before anything launches."""

    harness: HarnessConfig
    team_a: TeamPlan
    team_b: TeamPlan | None
    trainer: bool
    out_dir: str

    def __post_init__(self) -> None:
        if not self.harness.lockstep:
            raise ValueError("an embedded match must run in lockstep mode")


def _agent_world_mode(harness_mode: str) -> str:
    return "fullstate" if harness_mode == "fullstate" else "noisy"


def _join_deadline(cycles: int, lockstep: bool) -> float:
    return cycles * (0.02 if lockstep else 0.12) + JOIN_SLACK_S


def cmd_match(plan: LaunchPlan, quiet: bool = False) -> int:
    out = Path(plan.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    params = defaults()

    start = threading.Event()
    config = plan.harness
    config.log_path = str(out / "match.log")
    config.start_event = start
    server = HarnessServer(params, config)
    server_thread = threading.Thread(target=lambda: None)

    sessions: list[Session] = []
    threads: list[threading.Thread] = []
    reports: dict[str, object] = {}
    share = ShareChannel()
    mode = _agent_world_mode(config.mode)

    def launch(session: Session, decide, log_name: str, team: str) -> None:
        world = WorldModel(params, side=session.side, unum=session.unum,
                           team_name=team, mode=mode)
        if session.playmode:
            world.play_mode = session.playmode
        logger = AgentLogger(str(out / log_name))
        key = log_name.rsplit(".", 1)[0]

        def target():
            reports[key] = run_match_loop(session, world, decide,
                                          logger=logger, share=share)

        thread = threading.Thread(target=target, daemon=True, name=key)
        threads.append(thread)

    try:
        server_result: dict[str, object] = {}

        def serve():
            server_result["report"] = server.run_headless()

        server_thread = threading.Thread(target=serve, daemon=True)
        server_thread.start()

        teams = [plan.team_a] + ([plan.team_b] if plan.team_b else [])
        for team in teams:
            for unum in range(1, team.agents + 1):
                agent_cfg = AgentConfig(
                    team.name, role="player", goalie=unum == 1,
                    player_port=server.player_port,
                    trainer_port=server.trainer_port,
                    coach_port=server.coach_port,
                    mode=mode, lockstep=True)
                session = Session(agent_cfg).connect()
                sessions.append(session)
                launch(session, team.decider(),
                       f"agent_{session.side}{session.unum}.log", team.name)
        if plan.trainer:
            trainer_cfg = AgentConfig(
                "Trainer", role="trainer",
                player_port=server.player_port,
                trainer_port=server.trainer_port,
                coach_port=server.coach_port,
                mode="fullstate", lockstep=True)
            session = Session(trainer_cfg).connect()
            sessions.append(session)
            launch(session, decide_idle, "trainer.log", "Trainer")

        for thread in threads:
            thread.start()
        start.set()

        deadline = _join_deadline(config.cycles, config.lockstep)
        for thread in threads:
            thread.join(timeout=deadline)
        server_thread.join(timeout=30)

        stuck = [t.name for t in threads if t.is_alive()]
        if stuck or server_thread.is_alive():
            print(f"match did not finish: stuck components {stuck}",
                  file=sys.stderr)
            return 1

        report = server_result["report"]
        agent_reports = [r for r in reports.values()]
        summary = {
            "score_l": report["score_l"],
            "score_r": report["score_r"],
            "cycles": report["cycles"],
            "deadline_misses": sum(r.deadline_misses for r in agent_reports),
            "violations": sum(report["violations"].values()),
        }
        (out / "summary.json").write_text(
            json.dumps(summary, sort_keys=True, indent=2) + "\n")

        if not quiet:
            print(f"score {summary['score_l']}-{summary['score_r']} "
                  f"after {summary['cycles']} cycles")
            print(f"artifacts in {out}")
        if report["aborted"] or not all(r.clean for r in agent_reports):
            return 1
        return 0
    except Exception as exc:
        print(f"match failed: {exc}", file=sys.stderr)
        return 1
    finally:
        server.stop()
        for session in sessions:
            if session.state == "active":
                session.close()
        for thread in threads:
            if thread.is_alive():
                thread.join(timeout=5)
        server_thread.join(timeout=10)
        server.close()


def cmd_team(args) -> int:
    formation = load_formation(args.formation) if args.formation else None
    plan = TeamPlan(args.team, agents=args.agents, behavior=args.behavior,
                    formation=formation)
    log_dir = Path(args.log_dir) if args.log_dir else None
    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)

    sessions = []
    try:
        for unum in range(1, plan.agents + 1):
            config = AgentConfig(plan.name, role="player",
                                 goalie=unum == 1, host=args.host,
                                 player_port=args.port, mode=args.mode,
                                 lockstep=args.lockstep)
            sessions.append(Session(config).connect())
    except Exception as exc:
        print(f"team failed to connect: {exc}", file=sys.stderr)
        for session in sessions:
            session.close()
        return 1

    reports = {}
    threads = []
    params = defaults()
    for session in sessions:
        name = f"{session.side}{session.unum}"
        world = WorldModel(params, side=session.side, unum=session.unum,
                           team_name=plan.name, mode=args.mode)
        if session.playmode:
            world.play_mode = session.playmode
        logger = AgentLogger(str(log_dir / f"agent_{name}.log")
                             if log_dir else None)

        def target(s=session, w=world, lg=logger):
            reports[f"{s.side}{s.unum}"] = run_match_loop(
                s, w, plan.decider(), logger=lg)

        thread = threading.Thread(target=target, daemon=True, name=name)
        threads.append(thread)
        thread.start()
    for thread in threads:
        thread.join()

    clean = True
    for name in sorted(reports):
        report = reports[name]
        clean = clean and report.clean
        print(f"{name}: cycles={report.cycles} "
              f"commands={report.commands_sent} "
              f"misses={report.deadline_misses} clean={int(report.clean)}")
    return 0 if clean else 1


def cmd_trainer(args) -> int:
    config = AgentConfig("Trainer", role="trainer", host=args.host,
                         trainer_port=args.port, mode="fullstate",
                         lockstep=args.lockstep)
    try:
        session = Session(config).connect()
    except Exception as exc:
        print(f"trainer failed to connect: {exc}", file=sys.stderr)
        return 1
    world = WorldModel(defaults(), mode="fullstate")
    logger = AgentLogger(args.log)
    report = run_match_loop(session, world, decide_idle, logger=logger)
    print(f"trainer: cycles={report.cycles} clean={int(report.clean)}")
    return 0 if report.clean else 1


def cmd_harness(args) -> int:
    config = HarnessConfig(
        cycles=args.cycles, lockstep=args.lockstep, seed=args.seed,
        mode=args.mode, log_path=args.log,
        player_port=args.player_port, trainer_port=args.trainer_port,
        coach_port=args.coach_port, grace_s=args.grace,
        allow_no_agents=args.allow_no_agents)
    server = HarnessServer(defaults(), config)
    print(f"harness on ports {server.player_port}/{server.trainer_port}"
          f"/{server.coach_port}, waiting {args.grace:g}s for agents")
    try:
        report = server.run_headless()
    finally:
        server.close()
    if report["aborted"]:
        print("no agents joined; aborted", file=sys.stderr)
        return 1
    print(f"score {report['score_l']}-{report['score_r']} "
          f"after {report['cycles']} cycles, "
          f"{report['protocol_violations']} protocol violations")
    return 0


def _match_from_args(args) -> tuple[LaunchPlan, bool]:
    formation = load_formation(args.formation) if args.formation else None
    config = HarnessConfig(
        cycles=args.cycles, lockstep=True, seed=args.seed, mode=args.mode,
        player_port=args.player_port, trainer_port=args.trainer_port,
        coach_port=args.coach_port)
    plan = LaunchPlan(
        harness=config,
        team_a=TeamPlan(args.team_l, agents=args.agents,
                        behavior=args.behavior_l, formation=formation),
        team_b=TeamPlan(args.team_r, agents=args.agents,
                        behavior=args.behavior_r, formation=formation),
        trainer=args.trainer,
        out_dir=args.out)
    return plan, args.quiet


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ss2d",
        description="2D soccer simulation agents and embedded match harness")
    sub = parser.add_subparsers(dest="command", required=True)

    match = sub.add_parser(
        "match", help="run a self-contained match in this process")
    match.add_argument("--cycles", type=int, default=6000)
    match.add_argument("--seed", type=int, default=0)
    match.add_argument("--lockstep", action="store_true", default=True,
                       help="accepted for symmetry; embedded matches "
                            "always run in lockstep")
    match.add_argument("--mode", default="fullstate",
                       choices=("fullstate", "exact", "quantized"))
    match.add_argument("--agents", type=int, default=11,
                       help="players per team (1..11)")
    match.add_argument("--trainer", action="store_true")
    match.add_argument("--team-l", default="Left")
    match.add_argument("--team-r", default="Right")
    match.add_argument("--behavior-l", default="sample",
                       choices=BEHAVIOR_NAMES)
    match.add_argument("--behavior-r", default="sample",
                       choices=BEHAVIOR_NAMES)
    match.add_argument("--formation", default=None,
                       help="formation table file (11 lines: unum x y)")
    match.add_argument("--out", default="match-out",
                       help="output directory for logs and summary.json")
    match.add_argument("--player-port", type=int, default=0)
    match.add_argument("--trainer-port", type=int, default=0)
    match.add_argument("--coach-port", type=int, default=0)
    match.add_argument("--quiet", action="store_true")

    team = sub.add_parser(
        "team", help="connect a team of agents to a running server")
    team.add_argument("--host", default="127.0.0.1")
    team.add_argument("--port", type=int, default=6000)
    team.add_argument("--team", default="Pyrus")
    team.add_argument("--agents", type=int, default=11)
    team.add_argument("--behavior", default="sample", choices=BEHAVIOR_NAMES)
    team.add_argument("--formation", default=None)
    team.add_argument("--mode", default="noisy",
                      choices=("noisy", "fullstate"))
    team.add_argument("--lockstep", action="store_true",
                      help="reply (done) each cycle, for lockstep harnesses")
    team.add_argument("--log-dir", default=None)

    trainer = sub.add_parser(
        "trainer", help="connect a trainer to a running server")
    trainer.add_argument("--host", default="127.0.0.1")
    trainer.add_argument("--port", type=int, default=6001)
    trainer.add_argument("--lockstep", action="store_true")
    trainer.add_argument("--log", default=None)

    harness = sub.add_parser(
        "harness", help="serve a match to external agents")
    harness.add_argument("--cycles", type=int, default=6000)
    harness.add_argument("--lockstep", action="store_true")
    harness.add_argument("--seed", type=int, default=0)
    harness.add_argument("--mode", default="quantized",
                         choices=("fullstate", "exact", "quantized"))
    harness.add_argument("--log", default=None)
    harness.add_argument("--player-port", type=int, default=6000)
    harness.add_argument("--trainer-port", type=int, default=6001)
    harness.add_argument("--coach-port", type=int, default=6002)
    harness.add_argument("--grace", type=float, default=5.0,
                         help="seconds to wait for the first agents")
    harness.add_argument("--allow-no-agents", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "match":
            plan, quiet = _match_from_args(args)
            return cmd_match(plan, quiet=quiet)
        if args.command == "team":
            return cmd_team(args)
        if args.command == "trainer":
            return cmd_trainer(args)
        return cmd_harness(args)
    except (ValueError, OSError) as exc:
        print(f"ss2d {args.command}: {exc}", file=sys.stderr)
        return 2


def harness_main(argv=None) -> int:
    """The ss2d-harness alias: same as 'ss2d harness ...'."""
    if argv is None:
        argv = sys.argv[1:]
    return main(["harness", *argv])


if __name__ == "__main__":
    sys.exit(main())
