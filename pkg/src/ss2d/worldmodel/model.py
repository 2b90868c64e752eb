"""The belief container and its per-message update rules."""

from __future__ import annotations

import logging

from ..geom import AngleDeg, Vector2D
from ..params import ServerParamSet
from ..protocol import (
    BodyState,
    ErrorMsg,
    FullStateMsg,
    HearMsg,
    InitMsg,
    PlayerParamMsg,
    PlayerTypeMsg,
    PlayModeChangeMsg,
    SeeMsg,
    SeenObject,
    SenseBodyMsg,
    SensorMessage,
    ServerParamMsg,
    UnknownMsg,
)
from .localize import globalize_position, globalize_velocity, localize_self
from .predict import DEFAULT_HORIZON, build_intercept_table
from .state import (
    AGING_FACTOR,
    STALENESS_BOUND,
    UNKNOWN_ASSOC_RADIUS,
    InterceptTable,
    ObjectTrack,
    SelfState,
)

log = logging.getLogger("ss2d.worldmodel")

MAX_UNKNOWN_TRACKS = 22


def other_side(side: str) -> str:
    return "r" if side == "l" else "l"


class WorldModel:
    """One agent's belief state, mutated only by that agent's cycle."""

    def __init__(self, params: ServerParamSet, side: str | None = None,
                 unum: int | None = None, team_name: str | None = None,
                 mode: str = "noisy"):
        if mode not in ("noisy", "fullstate"):
            raise ValueError(f"mode must be noisy or fullstate, got {mode!r}")
        self.params = params
        self.mode = mode
        self.side = side
        self.unum = unum
        self.team_name = team_name
        self.self_state = SelfState(stamina=params.stamina_max)
        self.ball = ObjectTrack("ball")
        self.teammates: dict[int, ObjectTrack] = {}
        self.opponents: dict[int, ObjectTrack] = {}
        self.unknowns: list[ObjectTrack] = []
        self.play_mode = "before_kick_off"
        self.current_cycle = 0
        self.intercept: InterceptTable | None = None
        self.last_body: BodyState | None = None
        self.heard: list[HearMsg] = []

    # -- cycle bookkeeping --------------------------------------------------

    def _age_one_cycle(self) -> None:
        me = self.self_state
        me.position = me.position + me.velocity
        me.velocity = me.velocity * self.params.player_decay
        me.position_confidence = max(0.0, me.position_confidence * AGING_FACTOR)
        for track in self._all_tracks():
            decay = (self.params.ball_decay if track.identity == "ball"
                     else self.params.player_decay)
            track.position = track.position + track.velocity
            track.velocity = track.velocity * decay
            track.confidence = max(0.0, track.confidence * AGING_FACTOR)
            track.cycles_since_seen += 1
            if track.cycles_since_seen > STALENESS_BOUND:
                track.velocity = Vector2D(0.0, 0.0)

    def _all_tracks(self):
        yield self.ball
        yield from self.teammates.values()
        yield from self.opponents.values()
        yield from self.unknowns

    def _advance_to(self, time: int) -> None:
        while self.current_cycle < time:
            self._age_one_cycle()
            self.current_cycle += 1
            self.heard.clear()
            self.intercept = None  # stale against the advanced ball track

    # -- update dispatch ------------------------------------------------------

    def update(self, msg: SensorMessage) -> "WorldModel":
        if isinstance(msg, (SeeMsg, SenseBodyMsg, FullStateMsg, HearMsg,
                            PlayModeChangeMsg)):
            if msg.time < self.current_cycle:
                log.warning("dropping out-of-order message at time %d "
                            "(world is at %d)", msg.time, self.current_cycle)
                return self
            self._advance_to(msg.time)
        if isinstance(msg, SenseBodyMsg):
            self._apply_sense_body(msg)
        elif isinstance(msg, SeeMsg):
            self._apply_see(msg)
        elif isinstance(msg, FullStateMsg):
            self._apply_fullstate(msg)
        elif isinstance(msg, PlayModeChangeMsg):
            self.play_mode = msg.mode
        elif isinstance(msg, HearMsg):
            self.heard.append(msg)
        elif isinstance(msg, InitMsg):
            if msg.side is not None:
                self.side = msg.side
            if msg.unum is not None:
                self.unum = msg.unum
            if msg.playmode is not None:
                self.play_mode = msg.playmode
        elif isinstance(msg, ServerParamMsg):
            self.params = self.params.merge(msg.params)
        elif isinstance(msg, (PlayerParamMsg, PlayerTypeMsg)):
            pass  # heterogeneous types are outside this model's scope
        elif isinstance(msg, (ErrorMsg, UnknownMsg)):
            pass
        return self

    def _apply_sense_body(self, msg: SenseBodyMsg) -> None:
        body = msg.body
        self.last_body = body
        me = self.self_state
        me.neck_direction = AngleDeg(body.neck_direction)
        me.stamina = body.stamina
        # speed magnitude comes rounded to 0.01; the fullstate snapshot is
        # exact and already applied this cycle, so don't degrade it
        if self.mode != "fullstate":
            me.velocity = Vector2D.from_polar(
                body.speed_magnitude,
                me.face_direction + AngleDeg(body.speed_direction))
        me.last_update_cycle = msg.time

    def _apply_see(self, msg: SeeMsg) -> None:
        if self.mode == "fullstate":
            return  # the exact snapshot supersedes relative observations
        body = self.last_body if self.last_body is not None else BodyState()
        estimate = localize_self(msg, body, self.params, self.self_state)
        if estimate is not None:
            estimate.stamina = self.self_state.stamina
            self.self_state = estimate
        for obs in msg.objects:
            if obs.kind == "ball":
                self._update_ball(obs)
            elif obs.kind == "player":
                self._update_player(obs)

    def _update_ball(self, obs: SeenObject) -> None:
        if obs.distance is None:
            return  # direction-only: no position fix
        self.ball.position = globalize_position(self.self_state, obs)
        velocity = globalize_velocity(self.self_state, obs)
        if velocity is not None:
            self.ball.velocity = velocity
        self.ball.confidence = 1.0
        self.ball.cycles_since_seen = 0

    def _update_player(self, obs: SeenObject) -> None:
        if obs.distance is None:
            return
        position = globalize_position(self.self_state, obs)
        velocity = globalize_velocity(self.self_state, obs)
        side = None
        if obs.team is not None and self.team_name is not None:
            side = (self.side if obs.team == self.team_name
                    else other_side(self.side) if self.side else None)
        if side is not None and obs.unum is not None:
            if side == self.side and obs.unum == self.unum:
                return  # that is a mirror, not another player
            group = self.teammates if side == self.side else self.opponents
            track = group.setdefault(
                obs.unum, ObjectTrack("player", side=side, unum=obs.unum))
            self._refresh(track, position, velocity)
            return
        # anonymous sighting: nearest stale track within the association
        # radius, else a fresh unknown
        track = self._associate(position, side)
        if track is not None:
            self._refresh(track, position, velocity)
            return
        unknown = ObjectTrack("player", side=side)
        self._refresh(unknown, position, velocity)
        self.unknowns.append(unknown)
        if len(self.unknowns) > MAX_UNKNOWN_TRACKS:
            self.unknowns.pop(0)

    def _associate(self, position: Vector2D, side: str | None) -> ObjectTrack | None:
        best: ObjectTrack | None = None
        best_dist = UNKNOWN_ASSOC_RADIUS
        for track in self._all_tracks():
            if track.identity != "player" or track.cycles_since_seen == 0:
                continue
            if side is not None and track.side is not None and track.side != side:
                continue
            d = track.position.dist(position)
            if d <= best_dist:
                best = track
                best_dist = d
        return best

    @staticmethod
    def _refresh(track: ObjectTrack, position: Vector2D,
                 velocity: Vector2D | None) -> None:
        track.position = position
        if velocity is not None:
            track.velocity = velocity
        track.confidence = 1.0
        track.cycles_since_seen = 0

    def _apply_fullstate(self, msg: FullStateMsg) -> None:
        self.play_mode = msg.playmode
        bx, by, bvx, bvy = msg.ball
        self.ball.position = Vector2D(bx, by)
        self.ball.velocity = Vector2D(bvx, bvy)
        self.ball.confidence = 1.0
        self.ball.cycles_since_seen = 0
        # a side-less model (trainer view) files left players as teammates
        own_side = self.side if self.side is not None else "l"
        for p in msg.players:
            if p.side == self.side and p.unum == self.unum:
                me = self.self_state
                me.position = Vector2D(p.x, p.y)
                me.velocity = Vector2D(p.vx, p.vy)
                me.body_direction = AngleDeg(p.body_dir)
                me.neck_direction = AngleDeg(p.neck_dir)
                if p.stamina is not None:
                    me.stamina = p.stamina
                me.position_confidence = 1.0
                me.last_update_cycle = msg.time
                continue
            group = self.teammates if p.side == own_side else self.opponents
            track = group.setdefault(
                p.unum, ObjectTrack("player", side=p.side, unum=p.unum))
            track.position = Vector2D(p.x, p.y)
            track.velocity = Vector2D(p.vx, p.vy)
            track.confidence = 1.0
            track.cycles_since_seen = 0

    # -- derived products -----------------------------------------------------

    def refresh_intercept(self, horizon: int = DEFAULT_HORIZON) -> InterceptTable:
        self.intercept = build_intercept_table(self, horizon)
        return self.intercept


def update(world: WorldModel, msg: SensorMessage,
           params: ServerParamSet | None = None) -> WorldModel:
    """Functional-style wrapper over WorldModel.update."""
    if params is not None:
        world.params = params
    return world.update(msg)
