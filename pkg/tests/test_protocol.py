import random

import pytest

from ss2d.protocol import (
    Bye,
    Catch,
    ChangeMode,
    ChangeView,
    CommandError,
    Dash,
    Done,
    ErrorMsg,
    FullStateMsg,
    HearMsg,
    InitCommand,
    InitMsg,
    Kick,
    Move,
    MoveBall,
    MovePlayer,
    PLAY_MODES,
    PlayerParamMsg,
    PlayerTypeMsg,
    PlayModeChangeMsg,
    Say,
    SeeMsg,
    SenseBodyMsg,
    ServerParamMsg,
    Turn,
    TurnNeck,
    UnknownMsg,
    parse_command,
    parse_message,
    parse_param_block,
    serialize_command,
    tokenize,
)


# --- tokenizer -------------------------------------------------------------

def test_tokenize_nested():
    kinds_values = [(t.kind, t.value) for t in tokenize("(a (b 1))")]
    assert kinds_values == [
        ("(", "("), ("atom", "a"), ("(", "("), ("atom", "b"),
        ("atom", "1"), (")", ")"), (")", ")"),
    ]


def test_tokenize_quoted_string():
    tokens = tokenize('(say "ab c")')
    assert [t.kind for t in tokens] == ["(", "atom", "string", ")"]
    assert tokens[2].value == "ab c"


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_positions():
    tokens = tokenize("(kick  100 20)")
    assert [t.position for t in tokens] == [0, 1, 7, 11, 13]


def test_tokenize_escapes():
    tokens = tokenize(r'("a\"b" "c\\d")')
    assert tokens[1].value == 'a"b'
    assert tokens[2].value == "c\\d"


def test_tokenize_unterminated_quote_is_an_error():
    from ss2d.protocol import TokenizeError
    with pytest.raises(TokenizeError):
        tokenize('(say "oops)')


# --- parse_message: grammar examples ----------------------------------------

def test_parse_sense_body():
    msg = parse_message(
        "(sense_body 10 (view_mode high normal) (stamina 8000 1 130600)"
        " (speed 0.4 -30) (head_angle 45) (kick 2) (dash 31) (turn 5)"
        " (say 0) (turn_neck 1) (catch 0) (move 1) (change_view 0))"
    )
    assert isinstance(msg, SenseBodyMsg)
    assert msg.time == 10
    assert msg.body.stamina == 8000
    assert msg.body.effort == 1
    assert msg.body.speed_magnitude == pytest.approx(0.4)
    assert msg.body.speed_direction == -30
    assert msg.body.neck_direction == 45
    assert msg.body.view_width == "normal"
    assert msg.body.counts["dash"] == 31
    assert msg.body.counts["kick"] == 2


def test_parse_see_single_flag():
    msg = parse_message("(see 0 ((f c) 10 0))")
    assert isinstance(msg, SeeMsg)
    assert msg.time == 0
    assert len(msg.objects) == 1
    obj = msg.objects[0]
    assert obj.kind == "flag"
    assert obj.ident == "f c"
    assert obj.distance == 10
    assert obj.direction == 0


def test_parse_see_full_variants():
    msg = parse_message(
        '(see 42 ((b) 5 0 0.1 -0.2) ((p "Alpha" 5 goalie) 12 -20 0 0 30 40)'
        " ((g r) 60 3) ((l t) 18.2 -89) ((f p l c) 31))"
    )
    assert isinstance(msg, SeeMsg)
    ball, player, goal, line, far_flag = msg.objects
    assert ball.kind == "ball" and ball.dist_change == pytest.approx(0.1)
    assert player.kind == "player"
    assert (player.team, player.unum, player.goalie) == ("Alpha", 5, True)
    assert player.body_dir == 30 and player.head_dir == 40
    assert goal.ident == "g r"
    assert line.ident == "l t"
    # far object carries direction only
    assert far_flag.distance is None and far_flag.direction == 31


def test_parse_garbage_is_unknown():
    msg = parse_message("garbage((")
    assert isinstance(msg, UnknownMsg)
    assert msg.raw == b"garbage(("


def test_unknown_head_keeps_raw_text():
    raw = "(see_global 3 ((b) 1 2))"
    msg = parse_message(raw)
    assert isinstance(msg, UnknownMsg)
    assert msg.raw == raw.encode()


def test_oversized_message_is_error_variant():
    msg = parse_message(b"(see 0 " + b"x" * 9000 + b")")
    assert isinstance(msg, ErrorMsg)


def test_parse_hear_and_playmode():
    msg = parse_message("(hear 30 -45 passing)")
    assert isinstance(msg, HearMsg)
    assert msg.sender == pytest.approx(-45.0)
    assert msg.message == "passing"

    ref = parse_message("(hear 120 referee kick_in_l)")
    assert isinstance(ref, PlayModeChangeMsg)
    assert ref.mode == "kick_in_l"
    assert ref.time == 120

    scored = parse_message("(hear 900 referee goal_r_2)")
    assert isinstance(scored, PlayModeChangeMsg)
    assert scored.mode == "goal_r"

    own = parse_message("(hear 31 self hold)")
    assert isinstance(own, HearMsg) and own.sender == "self"


def test_parse_init_replies():
    msg = parse_message("(init l 7 before_kick_off)")
    assert msg == InitMsg(side="l", unum=7, playmode="before_kick_off", ok=True)
    assert isinstance(parse_message("(init ok)"), InitMsg)
    assert parse_message("(init r ok)").side == "r"
    # unum outside 1..11 is not a valid reply
    assert isinstance(parse_message("(init l 12 play_on)"), UnknownMsg)


def test_parse_fullstate():
    msg = parse_message(
        "(fullstate 500 (pmode play_on) (b 1.5 -2 0.3 0.04)"
        " (p l 1 0 -50 0 0 0 0 0 8000) (p r 11 0 50 20 -0.1 0 90 -5))"
    )
    assert isinstance(msg, FullStateMsg)
    assert msg.playmode == "play_on"
    assert msg.ball == (1.5, -2.0, 0.3, 0.04)
    assert len(msg.players) == 2
    left, right = msg.players
    assert (left.side, left.unum, left.stamina) == ("l", 1, 8000)
    assert (right.side, right.unum, right.stamina) == ("r", 11, None)
    assert right.body_dir == 90


# --- param blocks ------------------------------------------------------------

def test_server_param_pairs():
    msg = parse_message("(server_param (ball_decay 0.94)(goal_width 14.02))")
    assert isinstance(msg, ServerParamMsg)
    assert parse_param_block(msg) == {"ball_decay": 0.94, "goal_width": 14.02}


def test_player_type_pairs():
    msg = parse_message("(player_type (id 3)(player_speed_max 1.05))")
    assert isinstance(msg, PlayerTypeMsg)
    assert msg.type_id == 3
    assert msg.params["player_speed_max"] == 1.05


def test_empty_param_block():
    msg = parse_message("(server_param)")
    assert isinstance(msg, ServerParamMsg)
    assert msg.params == {}


def test_param_values_keep_strings_and_last_duplicate_wins():
    msg = parse_message('(server_param (log_dir "/tmp/x")(slow_down_factor 1)'
                        "(slow_down_factor 2))")
    assert msg.params["log_dir"] == "/tmp/x"
    assert msg.params["slow_down_factor"] == 2.0


def test_player_param_variant():
    msg = parse_message("(player_param (player_types 18))")
    assert isinstance(msg, PlayerParamMsg)
    assert msg.params == {"player_types": 18.0}


# --- serializer ---------------------------------------------------------------

def test_serialize_examples():
    assert serialize_command(Dash(100, 0)) == "(dash 100 0)"
    assert serialize_command(Turn(-30.5)) == "(turn -30.5)"
    assert serialize_command(InitCommand("Pyrus", 18, goalie=True)) == \
        "(init Pyrus (version 18) (goalie))"
    assert serialize_command(Bye()) == "(bye)"
    assert serialize_command(Kick(42.5, -7.25)) == "(kick 42.5 -7.25)"
    assert serialize_command(Say("ab c")) == '(say "ab c")'
    assert serialize_command(ChangeMode("play_on")) == "(change_mode play_on)"
    assert serialize_command(MoveBall(0, 0, 1.2, -0.4)) == "(move (ball) 0 0 1.2 -0.4)"
    assert serialize_command(MovePlayer("Alpha", 3, -10, 5)) == \
        "(move (player Alpha 3) -10 5)"
    assert serialize_command(Done()) == "(done)"


def test_serialized_form_has_no_newline():
    rng = random.Random(7)
    for _ in range(200):
        text = serialize_command(_random_command(rng))
        assert "\n" not in text and "\r" not in text


def test_validation_rejects_bad_commands():
    for bad in (
        Dash(150, 0),
        Dash(0, 200),
        Turn(181),
        Kick(-1, 0),
        Kick(10, -999),
        Catch(270),
        ChangeView("huge"),
        Say(""),
        Say("line\nbreak"),
        InitCommand(""),
        InitCommand("has space"),
        ChangeMode("lunch_break"),
        MoveBall(0, 0, 1.0, None),
        MovePlayer("Alpha", 0, 0, 0),
        Dash(float("nan"), 0),
        Turn(float("inf")),
    ):
        with pytest.raises(CommandError):
            serialize_command(bad)


def _random_command(rng):
    def q(value):
        return round(value, 4)

    say_alphabet = "abcXYZ019 _./()\"\\'"
    pick = rng.randrange(14)
    if pick == 0:
        return Dash(q(rng.uniform(-100, 100)), q(rng.uniform(-180, 180)))
    if pick == 1:
        return Turn(q(rng.uniform(-180, 180)))
    if pick == 2:
        return Kick(q(rng.uniform(0, 100)), q(rng.uniform(-180, 180)))
    if pick == 3:
        return Move(q(rng.uniform(-52.5, 52.5)), q(rng.uniform(-34, 34)))
    if pick == 4:
        return TurnNeck(q(rng.uniform(-180, 180)))
    if pick == 5:
        text = "".join(rng.choice(say_alphabet) for _ in range(rng.randrange(1, 12)))
        return Say(text)
    if pick == 6:
        return Catch(q(rng.uniform(-180, 180)))
    if pick == 7:
        return ChangeView(rng.choice(("narrow", "normal", "wide")))
    if pick == 8:
        return InitCommand(rng.choice(("Alpha", "Beta-2", "x_y.z")),
                           rng.choice((7, 13, 18)), rng.random() < 0.5)
    if pick == 9:
        return Bye()
    if pick == 10:
        return ChangeMode(rng.choice(PLAY_MODES))
    if pick == 11:
        if rng.random() < 0.5:
            return MoveBall(q(rng.uniform(-52.5, 52.5)), q(rng.uniform(-34, 34)))
        return MoveBall(q(rng.uniform(-52.5, 52.5)), q(rng.uniform(-34, 34)),
                        q(rng.uniform(-3, 3)), q(rng.uniform(-3, 3)))
    if pick == 12:
        body = q(rng.uniform(-180, 180)) if rng.random() < 0.5 else None
        return MovePlayer(rng.choice(("Alpha", "Beta")), rng.randrange(1, 12),
                          q(rng.uniform(-52.5, 52.5)), q(rng.uniform(-34, 34)), body)
    return Done()


def test_round_trip_is_identity_on_commands():
    rng = random.Random(20240817)
    for _ in range(3000):
        command = _random_command(rng)
        text = serialize_command(command)
        back = parse_command(text)
        assert back == command, f"{command!r} -> {text!r} -> {back!r}"


def test_parse_command_rejects_non_commands():
    assert parse_command("(see 0)") is None
    assert parse_command("dash 100") is None
    assert parse_command("(dash)") is None
    assert parse_command("(turn 10) (turn 20)") is None
    assert parse_command("") is None
    assert parse_command(b"\xff\xfe") is None


# --- fuzz ---------------------------------------------------------------------

def test_parser_never_crashes_on_fuzz():
    rng = random.Random(99)
    fragments = [b"(", b")", b'"', b"\\", b"see", b"sense_body", b"hear",
                 b"fullstate", b"init", b"server_param", b" ", b"1.5", b"-",
                 b"\x00", b"p", b"b 0 0", b"((f c) 10 0)", b"1e309", b"nan"]
    for trial in range(4000):
        if trial % 2 == 0:
            size = rng.randrange(0, 200)
            data = bytes(rng.randrange(256) for _ in range(size))
        else:
            data = b"".join(rng.choice(fragments)
                            for _ in range(rng.randrange(1, 40)))
        result = parse_message(data)
        assert result is not None
        assert parse_command(data) or True


def test_deeply_nested_input_degrades_to_unknown():
    msg = parse_message(b"(" * 4000)
    assert isinstance(msg, UnknownMsg)
    msg = parse_message(b"(see 0 " + b"(" * 500 + b")" * 500 + b")")
    assert isinstance(msg, UnknownMsg)


def test_non_finite_numbers_degrade_to_unknown():
    assert isinstance(parse_message("(see nan ((b) 1 2))"), UnknownMsg)
    assert isinstance(parse_message("(see 0 ((b) inf 0))").objects, tuple)
    # the non-finite object is skipped, the message survives
    msg = parse_message("(see 0 ((b) inf 0) ((f c) 10 0))")
    assert isinstance(msg, SeeMsg)
    assert len(msg.objects) == 1
