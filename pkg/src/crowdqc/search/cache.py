"""In-memory query cache, keyed by the joined effective query terms.

Live search APIs are rate-limited and billed per call; re-validating the
same draft must not burn quota. Unbounded by default (desk scale), with
optional oldest-first eviction. Reads are concurrent; writes serialize
through a lock.
"""
from __future__ import annotations

import threading
from collections import OrderedDict


class QueryCache:
    def __init__(self, max_entries: int | None = None):
        if max_entries is not None and max_entries < 1:
            raise ValueError("max_entries must be >= 1 or None")
        self._max_entries = max_entries
        self._entries: OrderedDict[str, tuple[str, ...]] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, key: str) -> tuple[str, ...] | None:
        with self._lock:
            snippets = self._entries.get(key)
            if snippets is None:
                self.misses += 1
            else:
                self.hits += 1
            return snippets

    def put(self, key: str, snippets: tuple[str, ...]) -> None:
        with self._lock:
            if key not in self._entries and self._max_entries is not None:
                while len(self._entries) >= self._max_entries:
                    self._entries.popitem(last=False)
            self._entries[key] = snippets
