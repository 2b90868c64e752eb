"""A complete 2v2 match inside one process.

Starts the embedded server on ephemeral ports, connects four sample
players over loopback UDP, plays 600 lockstep cycles, and prints what
came out. The same wiring, at full scale, is what `ss2d match` does.

Run with: python3 demos/embedded_match.py
"""

import threading

from ss2d.behaviors import decide_sample
from ss2d.harness import HarnessConfig, HarnessServer
from ss2d.params import defaults
from ss2d.runtime import AgentConfig, Session, run_match_loop
from ss2d.worldmodel import WorldModel

CYCLES = 600


def main():
    params = defaults()
    start = threading.Event()
    config = HarnessConfig(cycles=CYCLES, lockstep=True, seed=42,
                           mode="fullstate", player_port=0, coach_port=0,
                           trainer_port=0, start_event=start)
    server = HarnessServer(params, config)
    print(f"server up on port {server.player_port}")

    result = {}
    server_thread = threading.Thread(
        target=lambda: result.update(report=server.run_headless()))
    server_thread.start()

    threads = []
    try:
        for team in ("Reds", "Blues"):
            for unum in (1, 2):
                cfg = AgentConfig(team, goalie=unum == 1,
                                  player_port=server.player_port,
                                  coach_port=server.coach_port,
                                  trainer_port=server.trainer_port)
                session = Session(cfg).connect()
                world = WorldModel(params, side=session.side,
                                   unum=session.unum, team_name=team,
                                   mode="fullstate")
                print(f"  joined: {team} as {session.side}{session.unum}")

                def play(s=session, w=world):
                    report = run_match_loop(s, w, decide_sample)
                    print(f"  {s.side}{s.unum} done: {report.cycles} cycles, "
                          f"{report.commands_sent} commands")

                threads.append(threading.Thread(target=play))
        for t in threads:
            t.start()
        start.set()
        for t in threads:
            t.join()
        server_thread.join()
    finally:
        server.close()

    report = result["report"]
    print(f"\nfinal: {report['score_l']}-{report['score_r']} "
          f"after {report['cycles']} cycles ({report['play_mode']})")
    print(f"protocol violations: {report['protocol_violations']}")
    for side in ("l", "r"):
        stats = report["command_stats"][side]
        busiest = ", ".join(f"{name} x{count}" for name, count
                            in sorted(stats.items(), key=lambda kv: -kv[1]))
        print(f"commands from {side}: {busiest}")


if __name__ == "__main__":
    main()
