"""Scripted trainer: stage a goal without any players on the pitch.

The trainer owns the match: it can teleport the ball and force play
modes. Here it rolls the ball at the right goal, the referee awards
the goal, pauses, and restarts for the conceding side.

Run with: python3 demos/trainer_scenario.py
"""

import threading

from ss2d.behaviors import BehaviorOutcome
from ss2d.harness import HarnessConfig, HarnessServer
from ss2d.params import defaults
from ss2d.protocol import ChangeMode, MoveBall
from ss2d.runtime import AgentConfig, Session, run_match_loop
from ss2d.worldmodel import WorldModel


def main():
    params = defaults()
    start = threading.Event()
    config = HarnessConfig(cycles=30, lockstep=True, seed=0, mode="fullstate",
                           player_port=0, coach_port=0, trainer_port=0,
                           start_event=start)
    server = HarnessServer(params, config)
    result = {}
    server_thread = threading.Thread(
        target=lambda: result.update(report=server.run_headless()))
    server_thread.start()

    timeline = []

    def trainer_decide(world):
        if not timeline or timeline[-1][1] != world.play_mode:
            timeline.append((world.current_cycle, world.play_mode))
        if world.current_cycle == 2:
            # ball on the edge of the right penalty area, rolling goalward
            return BehaviorOutcome(trainer_commands=(
                MoveBall(36.0, 0.0, 2.5, 0.0),
                ChangeMode("play_on"),
            ))
        return BehaviorOutcome()

    cfg = AgentConfig("Coach", role="trainer",
                      player_port=server.player_port,
                      coach_port=server.coach_port,
                      trainer_port=server.trainer_port)
    session = Session(cfg).connect()
    world = WorldModel(params, mode="fullstate")
    thread = threading.Thread(
        target=lambda: run_match_loop(session, world, trainer_decide))
    try:
        thread.start()
        start.set()
        thread.join()
        server_thread.join()
    finally:
        server.close()

    report = result["report"]
    print("mode timeline as the trainer saw it:")
    for cycle, mode in timeline:
        print(f"  cycle {cycle:3d}: {mode}")
    print(f"\nfinal score {report['score_l']}-{report['score_r']} "
          f"over {report['cycles']} cycles")
    ball = server.state.ball.position
    print(f"ball back at the center mark: ({ball.x:.1f}, {ball.y:.1f})")


if __name__ == "__main__":
    main()
