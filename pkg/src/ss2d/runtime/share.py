"""In-process inter-agent snapshot channel.

Last-writer-wins per key.  Reads take no lock: CPython dict reads are
atomic, and a reader seeing the previous snapshot during a concurrent
put is exactly the contract (readers never block writers).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True, slots=True)
class ShareEntry:
    value: Any
    cycle: int


class ShareChannel:
    def __init__(self) -> None:
        self._entries: dict[str, ShareEntry] = {}
        self._write_lock = threading.Lock()

    def put(self, key: str, value: Any, cycle: int) -> None:
        with self._write_lock:
            current = self._entries.get(key)
            if current is not None and current.cycle > cycle:
                return  # a fresher write already landed
            self._entries[key] = ShareEntry(value, cycle)

    def get(self, key: str) -> ShareEntry | None:
        """Freshest snapshot for the key; None when never written."""
        return self._entries.get(key)

    def keys(self) -> list[str]:
        return list(self._entries)
