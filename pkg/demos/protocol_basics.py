"""Wire protocol in five minutes: parse datagrams, build commands.

Run with: python3 demos/protocol_basics.py
"""

from ss2d.protocol import (
    Dash,
    Kick,
    Move,
    Say,
    Turn,
    parse_command,
    parse_message,
    serialize_command,
    tokenize,
    validate_command,
)


def main():
    print("== tokenizing ==")
    for token in tokenize('(hear 12 referee goal_l_1)'):
        print(f"  {token}")
    print()

    print("== parsing server datagrams ==")
    see = parse_message(
        b'(see 30 ((f c) 18.2 -4) ((g r) 60.1 2) '
        b'((b) 3.5 10 0.2 -1.1) ((p "Rivals" 7) 9.4 -30))')
    print(f"  {type(see).__name__} at cycle {see.time}, "
          f"{len(see.objects)} objects:")
    for obj in see.objects:
        print(f"    {obj.kind:8s} dist={obj.distance} dir={obj.direction}")

    body = parse_message(
        b"(sense_body 30 (view_mode high normal) (stamina 7421 1 41200) "
        b"(speed 0.31 -4) (head_angle 15))")
    print(f"  {type(body).__name__}: stamina={body.body.stamina} "
          f"speed={body.body.speed_magnitude} neck={body.body.neck_direction}")

    # referee announcements collapse straight into play-mode changes;
    # anything else heard stays a plain hear
    mode = parse_message(b"(hear 30 referee goal_l_1)")
    print(f"  {type(mode).__name__}: mode -> {mode.mode!r}")
    shout = parse_message(b'(hear 30 12 "cover left")')
    print(f"  {type(shout).__name__}: from {shout.sender!r}: {shout.message!r}")
    print()

    print("== garbage never raises ==")
    for junk in (b"", b"((((", b"\xff\x00\xfe", b"(see nan)"):
        print(f"  {junk!r:24} -> {type(parse_message(junk)).__name__}")
    print()

    print("== building commands ==")
    plan = [Move(-20, 0), Turn(35.5), Dash(80, 0), Kick(100, -12.25),
            Say("cover left")]
    for command in plan:
        validate_command(command)
        text = serialize_command(command)
        back = parse_command(text)
        tag = "ok" if back == command else "MISMATCH"
        print(f"  {text:28} round-trips: {tag}")


if __name__ == "__main__":
    main()
