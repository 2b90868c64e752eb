"""S-expression tokenizer.

Splits a message into parens, bare atoms and quoted strings.  Tokens
carry their byte offset so parse errors can point at the spot that
broke.  Quoted strings admit backslash escapes; an unterminated quote
is a TokenizeError, which the message parser downgrades to Unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

OPEN = "("
CLOSE = ")"
ATOM = "atom"
STRING = "string"

_TOKEN_RE = re.compile(
    r"""
    (?P<open>\()
  | (?P<close>\))
  | "(?P<string>(?:[^"\\]|\\.)*)"
  | (?P<atom>[^\s()"]+)
    """,
    re.VERBOSE,
)

_WS_RE = re.compile(r"[\s\x00]+")


class TokenizeError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    value: str
    position: int


def _unescape(body: str) -> str:
    return re.sub(r"\\(.)", r"\1", body)


def tokenize(text: str) -> list[Token]:
    """Tokenize text fully; raises TokenizeError on a bad lexeme."""
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ws = _WS_RE.match(text, pos)
        if ws:
            pos = ws.end()
            if pos >= n:
                break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            # the only way the alternation fails on a non-space char is
            # an unterminated quoted string
            raise TokenizeError("unterminated quote", pos)
        # test group values, not lastgroup: an empty quoted string is a
        # zero-width group match and lastgroup does not see it
        if match.group("open") is not None:
            tokens.append(Token(OPEN, "(", pos))
        elif match.group("close") is not None:
            tokens.append(Token(CLOSE, ")", pos))
        elif match.group("string") is not None:
            tokens.append(Token(STRING, _unescape(match.group("string")), pos))
        else:
            tokens.append(Token(ATOM, match.group("atom"), pos))
        pos = match.end()
    return tokens
