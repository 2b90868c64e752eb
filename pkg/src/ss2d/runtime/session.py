"""UDP session with the server: handshake, send, receive.

The server may answer from a different port than the one the init was
sent to (the real rcssserver does); the session follows the reply
address from then on.
"""

from __future__ import annotations

import logging
import socket
import time

from ..protocol import (
    Command,
    ErrorMsg,
    InitCommand,
    InitMsg,
    SensorMessage,
    parse_message,
    serialize_command,
)
from .config import AgentConfig

log = logging.getLogger("ss2d.runtime")

HANDSHAKE_TIMEOUT_S = 3.0
HANDSHAKE_RETRIES = 3


class ConnectError(RuntimeError):
    """Server unreachable: no init reply within the retry budget."""


class HandshakeError(RuntimeError):
    """Server answered the init with an (error ...) reply."""


class Session:
    def __init__(self, config: AgentConfig):
        self.config = config
        self.state = "connecting"
        self.side: str | None = None
        self.unum: int | None = None
        self.playmode: str | None = None
        self.server_addr: tuple[str, int] | None = None
        self.backlog: list[bytes] = []   # datagrams that raced the handshake
        self._sock: socket.socket | None = None
        self._local_port = 0

    def _open_socket(self) -> None:
        sock = socket.socket(socket.AF_INET, socket.SOCK_DGRAM)
        sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        sock.bind(("", self._local_port))
        self._local_port = sock.getsockname()[1]
        self._sock = sock

    def _init_text(self) -> str:
        return serialize_command(InitCommand(
            self.config.team_name, self.config.version, self.config.goalie))

    def connect(self, timeout_s: float = HANDSHAKE_TIMEOUT_S,
                retries: int = HANDSHAKE_RETRIES) -> "Session":
        if self.state == "active":
            raise RuntimeError("session already active; init happens once")
        if self._sock is None:
            self._open_socket()
        target = (self.config.host, self.config.port)
        init = self._init_text().encode("ascii")
        for attempt in range(retries):
            self._sock.sendto(init, target)
            deadline = time.monotonic() + timeout_s
            while True:
                remaining = deadline - time.monotonic()
                if remaining <= 0:
                    break
                self._sock.settimeout(remaining)
                try:
                    data, addr = self._sock.recvfrom(8192)
                except socket.timeout:
                    break
                except OSError as exc:
                    raise ConnectError(f"socket error during handshake: {exc}")
                msg = parse_message(data)
                if isinstance(msg, ErrorMsg):
                    raise HandshakeError(msg.text)
                if isinstance(msg, InitMsg):
                    self.side = msg.side
                    self.unum = msg.unum
                    self.playmode = msg.playmode
                    self.server_addr = addr
                    self.state = "active"
                    return self
                self.backlog.append(data)
            log.info("init attempt %d timed out", attempt + 1)
        raise ConnectError(
            f"no init reply from {target} after {retries} attempts")

    def reconnect(self) -> bool:
        """One silent retry after a socket failure; same local port, so a
        harness keeps the existing slot assignment."""
        try:
            if self._sock is not None:
                self._sock.close()
            self._sock = None
            self.state = "connecting"
            self._open_socket()
            self.connect()
            return True
        except (ConnectError, HandshakeError, OSError) as exc:
            log.error("reconnect failed: %s", exc)
            self.state = "closed"
            return False

    def send(self, text: str) -> None:
        if self.state != "active":
            raise RuntimeError("cannot send before the init exchange")
        self._sock.sendto(text.encode("ascii"), self.server_addr)

    def send_command(self, command: Command) -> str:
        text = serialize_command(command)
        self.send(text)
        return text

    def recv_raw(self, timeout: float) -> bytes | None:
        """Next datagram, or None on timeout."""
        if self.backlog:
            return self.backlog.pop(0)
        self._sock.settimeout(timeout)
        try:
            data, addr = self._sock.recvfrom(8192)
        except socket.timeout:
            return None
        self.server_addr = addr
        return data

    def recv_message(self, timeout: float) -> SensorMessage | None:
        data = self.recv_raw(timeout)
        return None if data is None else parse_message(data)

    def close(self, say_bye: bool = True) -> None:
        if self._sock is not None:
            if self.state == "active" and say_bye:
                try:
                    self.send("(bye)")
                except OSError:
                    pass
            self._sock.close()
            self._sock = None
        self.state = "closed"
