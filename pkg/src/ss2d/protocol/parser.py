"""Message parsing: raw datagram in, typed SensorMessage out.

parse_message is total.  Anything outside the documented grammar drops
to Unknown (carrying the raw bytes) rather than raising; oversized
input yields the Error variant.  parse_command is the reverse of the
command serializer and is used by the match harness and by round-trip
tests.
"""

from __future__ import annotations

import logging
import math

from .messages import (
    BodyState,
    Bye,
    Catch,
    ChangeMode,
    ChangeView,
    Command,
    Dash,
    Done,
    ErrorMsg,
    FullStateMsg,
    FullStatePlayer,
    HearMsg,
    InitCommand,
    InitMsg,
    Kick,
    MAX_MESSAGE_BYTES,
    Move,
    MoveBall,
    MovePlayer,
    PLAY_MODES,
    PlayerParamMsg,
    PlayerTypeMsg,
    PlayModeChangeMsg,
    RawMessage,
    Say,
    SeeMsg,
    SeenObject,
    SenseBodyMsg,
    SensorMessage,
    ServerParamMsg,
    Turn,
    TurnNeck,
    UnknownMsg,
    VIEW_WIDTHS,
)
from .tokenizer import ATOM, CLOSE, OPEN, STRING, Token, TokenizeError, tokenize

log = logging.getLogger("ss2d.protocol")

# nesting deeper than this is nothing the grammar can produce
MAX_DEPTH = 64

HEAR_SENDERS = ("referee", "self", "online_coach_left", "online_coach_right")


class ParseError(ValueError):
    pass


class Quoted(str):
    """An atom that arrived as a quoted string."""

    __slots__ = ()


Node = "str | list"  # informal: tree nodes are atoms or lists of nodes


def build_forms(tokens: list[Token]) -> list:
    """Group a token stream into top-level S-expression trees."""
    root: list = []
    stack: list[list] = [root]
    for tok in tokens:
        if tok.kind == OPEN:
            if len(stack) > MAX_DEPTH:
                raise ParseError(f"nesting deeper than {MAX_DEPTH} at offset {tok.position}")
            child: list = []
            stack[-1].append(child)
            stack.append(child)
        elif tok.kind == CLOSE:
            if len(stack) == 1:
                raise ParseError(f"unbalanced ')' at offset {tok.position}")
            stack.pop()
        elif tok.kind == STRING:
            stack[-1].append(Quoted(tok.value))
        else:
            stack[-1].append(tok.value)
    if len(stack) != 1:
        raise ParseError("unclosed '('")
    return root


def _real(node) -> float:
    if isinstance(node, list):
        raise ParseError("expected a number, got a list")
    value = float(node)
    if not math.isfinite(value):
        raise ParseError(f"non-finite number {node!r}")
    return value


def _int(node) -> int:
    if isinstance(node, list):
        raise ParseError("expected an integer, got a list")
    return int(str(node))


def _time(node) -> int:
    value = _int(node)
    if value < 0:
        raise ParseError(f"negative time {value}")
    return value


def _atom(node) -> str:
    if isinstance(node, list):
        raise ParseError("expected an atom, got a list")
    return str(node)


# --- see ----------------------------------------------------------------

def _objname(parts) -> tuple[str, str | None, str | None, int | None, bool]:
    if not parts or any(isinstance(p, list) for p in parts):
        raise ParseError("bad object name")
    tag = str(parts[0])
    if tag == "b" and len(parts) == 1:
        return "ball", None, None, None, False
    if tag == "g" and len(parts) == 2 and parts[1] in ("l", "r"):
        return "goal", f"g {parts[1]}", None, None, False
    if tag == "f" and len(parts) >= 2:
        return "flag", " ".join(str(p) for p in parts), None, None, False
    if tag == "l" and len(parts) == 2 and parts[1] in ("l", "r", "t", "b"):
        return "line", f"l {parts[1]}", None, None, False
    if tag == "p" and len(parts) <= 4:
        team = str(parts[1]) if len(parts) >= 2 else None
        unum = _int(parts[2]) if len(parts) >= 3 else None
        goalie = len(parts) >= 4 and str(parts[3]) == "goalie"
        return "player", None, team, unum, goalie
    return "unknown", " ".join(str(p) for p in parts), None, None, False


def _seen_object(item) -> SeenObject | None:
    """Build one see item; malformed items are skipped, not fatal."""
    if not isinstance(item, list) or not item or not isinstance(item[0], list):
        return None
    try:
        kind, ident, team, unum, goalie = _objname(item[0])
        values = [_real(v) for v in item[1:]]
    except (ParseError, ValueError):
        return None
    fields: dict = {}
    if len(values) == 1:
        # far object: direction only
        fields["direction"] = values[0]
    elif len(values) >= 2:
        fields["distance"] = values[0]
        fields["direction"] = values[1]
        if len(values) >= 3:
            fields["dist_change"] = values[2]
        if len(values) >= 4:
            fields["dir_change"] = values[3]
        if len(values) >= 5:
            fields["body_dir"] = values[4]
        if len(values) >= 6:
            fields["head_dir"] = values[5]
    if fields.get("distance") is not None and fields["distance"] < 0:
        return None
    return SeenObject(kind=kind, ident=ident, team=team, unum=unum,
                      goalie=goalie, **fields)


def _build_see(body) -> SeeMsg:
    if not body:
        raise ParseError("see without time")
    time = _time(body[0])
    objects = []
    for item in body[1:]:
        obj = _seen_object(item)
        if obj is not None:
            objects.append(obj)
    return SeeMsg(time, tuple(objects))


# --- sense_body ---------------------------------------------------------

_COUNT_BLOCKS = ("kick", "dash", "turn", "say", "turn_neck", "catch",
                 "move", "change_view")


def _build_sense_body(body) -> SenseBodyMsg:
    if not body:
        raise ParseError("sense_body without time")
    time = _time(body[0])
    stamina, effort, recovery = 0.0, 1.0, 1.0
    speed_mag, speed_dir, neck = 0.0, 0.0, 0.0
    quality, width = "high", "normal"
    counts: dict[str, int] = {}
    for block in body[1:]:
        if not isinstance(block, list) or not block or isinstance(block[0], list):
            continue
        name = str(block[0])
        vals = block[1:]
        if name == "view_mode" and len(vals) >= 2:
            quality, width = _atom(vals[0]), _atom(vals[1])
        elif name == "stamina" and len(vals) >= 2:
            stamina = _real(vals[0])
            effort = _real(vals[1])
            if len(vals) >= 3:
                recovery = _real(vals[2])
        elif name == "speed" and vals:
            speed_mag = _real(vals[0])
            if len(vals) >= 2:
                speed_dir = _real(vals[1])
        elif name == "head_angle" and vals:
            neck = _real(vals[0])
        elif name in _COUNT_BLOCKS and vals:
            counts[name] = _int(vals[0])
        # anything else (arm, focus, tackle, ...) is outside the subset
    body_state = BodyState(
        stamina=stamina, effort=effort, recovery=recovery,
        speed_magnitude=speed_mag, speed_direction=speed_dir,
        neck_direction=neck, view_quality=quality, view_width=width,
        counts=counts,
    )
    return SenseBodyMsg(time, body_state)


# --- hear ----------------------------------------------------------------

def _canonical_mode(text: str) -> str | None:
    if text in PLAY_MODES:
        return text
    # referee announces goals with a running score suffix: goal_l_2
    for prefix in ("goal_l_", "goal_r_"):
        if text.startswith(prefix) and text[len(prefix):].isdigit():
            return prefix[:-1]
    return None


def _build_hear(body) -> HearMsg | PlayModeChangeMsg:
    if len(body) < 3:
        raise ParseError("hear needs time, sender and message")
    time = _time(body[0])
    sender_node = body[1]
    if isinstance(sender_node, list):
        raise ParseError("bad hear sender")
    sender: str | float
    try:
        sender = _real(sender_node)
    except (ParseError, ValueError):
        sender = str(sender_node)
        if sender not in HEAR_SENDERS:
            raise ParseError(f"unknown hear sender {sender!r}") from None
    parts = body[2:]
    if any(isinstance(p, list) for p in parts):
        raise ParseError("bad hear message")
    message = " ".join(str(p) for p in parts)
    if sender == "referee":
        mode = _canonical_mode(message)
        if mode is not None:
            return PlayModeChangeMsg(time, mode)
    return HearMsg(time, sender, message)


# --- fullstate ------------------------------------------------------------

def _build_fullstate(body) -> FullStateMsg:
    if not body:
        raise ParseError("fullstate without time")
    time = _time(body[0])
    mode: str | None = None
    ball: tuple[float, float, float, float] | None = None
    players: list[FullStatePlayer] = []
    score = (0, 0)
    for block in body[1:]:
        if not isinstance(block, list) or not block or isinstance(block[0], list):
            raise ParseError("bad fullstate block")
        name = str(block[0])
        vals = block[1:]
        if name == "pmode" and len(vals) == 1:
            mode = _atom(vals[0])
        elif name == "score" and len(vals) == 2:
            score = (_int(vals[0]), _int(vals[1]))
        elif name == "b" and len(vals) >= 4:
            ball = (_real(vals[0]), _real(vals[1]), _real(vals[2]), _real(vals[3]))
        elif name == "p" and len(vals) >= 9:
            side = _atom(vals[0])
            if side not in ("l", "r"):
                raise ParseError(f"bad side {side!r}")
            players.append(FullStatePlayer(
                side=side,
                unum=_int(vals[1]),
                type_id=_int(vals[2]),
                x=_real(vals[3]), y=_real(vals[4]),
                vx=_real(vals[5]), vy=_real(vals[6]),
                body_dir=_real(vals[7]), neck_dir=_real(vals[8]),
                stamina=_real(vals[9]) if len(vals) >= 10 else None,
            ))
        else:
            raise ParseError(f"unknown fullstate block {name!r}")
    if mode is None or ball is None:
        raise ParseError("fullstate missing pmode or ball")
    return FullStateMsg(time, mode, ball, tuple(players), score)


# --- init reply, params, error --------------------------------------------

def _build_init(body) -> InitMsg:
    if len(body) == 1 and body[0] == "ok":
        return InitMsg(ok=True)
    if len(body) == 2 and body[1] == "ok" and body[0] in ("l", "r"):
        return InitMsg(side=str(body[0]), ok=True)
    if len(body) == 3:
        side = _atom(body[0])
        if side not in ("l", "r"):
            raise ParseError(f"bad side {side!r}")
        unum = _int(body[1])
        if not 1 <= unum <= 11:
            raise ParseError(f"uniform number {unum} out of range")
        return InitMsg(side=side, unum=unum, playmode=_atom(body[2]), ok=True)
    raise ParseError("bad init reply")


def _param_pairs(body) -> dict[str, float | str]:
    out: dict[str, float | str] = {}
    for block in body:
        if (not isinstance(block, list) or len(block) != 2
                or isinstance(block[0], list) or isinstance(block[1], list)):
            raise ParseError("malformed parameter pair")
        key = str(block[0])
        raw_value = block[1]
        value: float | str
        if isinstance(raw_value, Quoted):
            value = str(raw_value)
        else:
            try:
                value = _real(raw_value)
            except (ParseError, ValueError):
                value = str(raw_value)
        if key in out:
            log.warning("duplicate parameter %r, keeping the last value", key)
        out[key] = value
    return out


def _build_player_type(body) -> PlayerTypeMsg:
    pairs = _param_pairs(body)
    if "id" not in pairs:
        raise ParseError("player_type without id")
    type_id = int(pairs.pop("id"))
    return PlayerTypeMsg(type_id, pairs)


def parse_param_block(msg: SensorMessage) -> dict[str, float | str]:
    """Key-value view of a parameter message."""
    if isinstance(msg, (ServerParamMsg, PlayerParamMsg)):
        return dict(msg.params)
    if isinstance(msg, PlayerTypeMsg):
        return {"id": float(msg.type_id), **msg.params}
    raise TypeError(f"not a parameter message: {type(msg).__name__}")


# --- entry points ----------------------------------------------------------

def parse_message(raw: RawMessage | bytes | str) -> SensorMessage:
    if isinstance(raw, RawMessage):
        data = raw.text
    elif isinstance(raw, str):
        data = raw.encode("ascii", errors="replace")
    else:
        data = bytes(raw)
    if len(data) > MAX_MESSAGE_BYTES:
        return ErrorMsg(f"message too long: {len(data)} bytes")
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        return UnknownMsg(data)
    try:
        forms = build_forms(tokenize(text))
    except (TokenizeError, ParseError):
        return UnknownMsg(data)
    if len(forms) != 1 or not isinstance(forms[0], list) or not forms[0]:
        return UnknownMsg(data)
    head = forms[0][0]
    if isinstance(head, list):
        return UnknownMsg(data)
    builder = _BUILDERS.get(str(head))
    if builder is None:
        return UnknownMsg(data)
    try:
        return builder(forms[0][1:])
    except (ParseError, ValueError, TypeError, IndexError, OverflowError):
        return UnknownMsg(data)


def _build_error(body) -> ErrorMsg:
    if any(isinstance(p, list) for p in body):
        raise ParseError("bad error body")
    return ErrorMsg(" ".join(str(p) for p in body))


_BUILDERS = {
    "see": _build_see,
    "sense_body": _build_sense_body,
    "hear": _build_hear,
    "fullstate": _build_fullstate,
    "init": _build_init,
    "server_param": lambda body: ServerParamMsg(_param_pairs(body)),
    "player_param": lambda body: PlayerParamMsg(_param_pairs(body)),
    "player_type": _build_player_type,
    "error": _build_error,
}


def parse_command(text: str | bytes) -> Command | None:
    """Parse one client command; None when the text is not a command."""
    if isinstance(text, bytes):
        try:
            text = text.rstrip(b"\x00").decode("ascii")
        except UnicodeDecodeError:
            return None
    try:
        forms = build_forms(tokenize(text))
    except (TokenizeError, ParseError):
        return None
    if len(forms) != 1 or not isinstance(forms[0], list) or not forms[0]:
        return None
    form = forms[0]
    head = form[0]
    if isinstance(head, list):
        return None
    body = form[1:]
    try:
        return _command_from(str(head), body)
    except (ParseError, ValueError, TypeError, IndexError, OverflowError):
        return None


def _command_from(head: str, body: list) -> Command | None:
    if head == "dash":
        if len(body) == 1:
            return Dash(_real(body[0]))
        if len(body) == 2:
            return Dash(_real(body[0]), _real(body[1]))
        return None
    if head == "turn" and len(body) == 1:
        return Turn(_real(body[0]))
    if head == "kick" and len(body) == 2:
        return Kick(_real(body[0]), _real(body[1]))
    if head == "move":
        return _parse_move(body)
    if head == "turn_neck" and len(body) == 1:
        return TurnNeck(_real(body[0]))
    if head == "say" and body and all(not isinstance(p, list) for p in body):
        return Say(" ".join(str(p) for p in body))
    if head == "catch" and len(body) == 1:
        return Catch(_real(body[0]))
    if head == "change_view" and len(body) == 1:
        width = _atom(body[0])
        return ChangeView(width) if width in VIEW_WIDTHS else None
    if head == "init" and body:
        return _parse_init_command(body)
    if head == "bye" and not body:
        return Bye()
    if head == "change_mode" and len(body) == 1:
        mode = _atom(body[0])
        return ChangeMode(mode) if mode in PLAY_MODES else None
    if head == "done" and not body:
        return Done()
    return None


def _parse_move(body: list) -> Command | None:
    if body and isinstance(body[0], list):
        target = body[0]
        values = [_real(v) for v in body[1:]]
        if target == ["ball"]:
            if len(values) == 2:
                return MoveBall(values[0], values[1])
            if len(values) == 4:
                return MoveBall(values[0], values[1], values[2], values[3])
            return None
        if len(target) == 3 and target[0] == "player":
            team = str(target[1])
            unum = _int(target[2])
            if len(values) == 2:
                return MovePlayer(team, unum, values[0], values[1])
            if len(values) == 3:
                return MovePlayer(team, unum, values[0], values[1], values[2])
        return None
    if len(body) == 2:
        return Move(_real(body[0]), _real(body[1]))
    return None


def _parse_init_command(body: list) -> InitCommand | None:
    if isinstance(body[0], list):
        return None
    team = str(body[0])
    version = 18
    goalie = False
    for extra in body[1:]:
        if isinstance(extra, list) and len(extra) == 2 and extra[0] == "version":
            version = _int(extra[1])
        elif extra == ["goalie"]:
            goalie = True
        else:
            return None
    return InitCommand(team, version, goalie)
