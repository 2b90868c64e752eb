"""Wire protocol: S-expression tokenizer, message parser, command serializer."""

from .messages import (
    BODY_COMMANDS,
    BodyState,
    Bye,
    Catch,
    ChangeMode,
    ChangeView,
    Command,
    CommandError,
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
    TRAINER_COMMANDS,
    Turn,
    TurnNeck,
    UnknownMsg,
    VIEW_WIDTHS,
    is_body_command,
)
from .parser import ParseError, Quoted, build_forms, parse_command, parse_message, parse_param_block
from .serializer import format_real, serialize_command, validate_command
from .tokenizer import Token, TokenizeError, tokenize

__all__ = [
    "BODY_COMMANDS",
    "BodyState",
    "Bye",
    "Catch",
    "ChangeMode",
    "ChangeView",
    "Command",
    "CommandError",
    "Dash",
    "Done",
    "ErrorMsg",
    "FullStateMsg",
    "FullStatePlayer",
    "HearMsg",
    "InitCommand",
    "InitMsg",
    "Kick",
    "MAX_MESSAGE_BYTES",
    "Move",
    "MoveBall",
    "MovePlayer",
    "PLAY_MODES",
    "ParseError",
    "PlayerParamMsg",
    "PlayerTypeMsg",
    "PlayModeChangeMsg",
    "Quoted",
    "RawMessage",
    "Say",
    "SeeMsg",
    "SeenObject",
    "SenseBodyMsg",
    "SensorMessage",
    "ServerParamMsg",
    "TRAINER_COMMANDS",
    "Token",
    "TokenizeError",
    "Turn",
    "TurnNeck",
    "UnknownMsg",
    "VIEW_WIDTHS",
    "build_forms",
    "format_real",
    "is_body_command",
    "parse_command",
    "parse_message",
    "parse_param_block",
    "serialize_command",
    "tokenize",
    "validate_command",
]
