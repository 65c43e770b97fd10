"""HTTP search client speaking a Custom-Search-style JSON protocol.

One GET per query with parameters ``key`` (API key), ``cx`` (engine id)
and ``q`` (the query string); the response body is JSON whose ``items``
array carries a ``snippet`` string per result. Anything that prevents a
well-formed answer (transport error, non-2xx status, unparseable body)
raises BackendUnavailable — an empty item list does not.
"""
from __future__ import annotations

import threading
import time

import requests

from ..textkit import Tokens
from .models import BackendUnavailable


class RateLimiter:
    """Blocks callers so that at most `per_second` calls go through per second."""

    def __init__(self, per_second: float):
        if per_second <= 0:
            raise ValueError("rate must be positive")
        self._interval = 1.0 / per_second
        self._lock = threading.Lock()
        self._next_slot = 0.0

    def wait(self) -> None:
        with self._lock:
            now = time.monotonic()
            slot = max(self._next_slot, now)
            self._next_slot = slot + self._interval
        delay = slot - now
        if delay > 0:
            time.sleep(delay)


class HttpSearchBackend:
    def __init__(
        self,
        endpoint: str,
        api_key: str,
        engine_id: str,
        timeout: float = 10.0,
        rate_per_second: float = 10.0,
        session: requests.Session | None = None,
        backend_id: str = "http",
    ):
        self.endpoint = endpoint
        self.api_key = api_key
        self.engine_id = engine_id
        self.timeout = timeout
        self.backend_id = backend_id
        self.fetch_count = 0
        self._limiter = RateLimiter(rate_per_second)
        self._session = session or requests.Session()

    def fetch(self, terms: Tokens, top_k: int) -> list[str]:
        self.fetch_count += 1
        self._limiter.wait()
        params = {
            "key": self.api_key,
            "cx": self.engine_id,
            "q": " ".join(terms),
            "num": top_k,
        }
        try:
            response = self._session.get(self.endpoint, params=params, timeout=self.timeout)
        except requests.RequestException as exc:
            raise BackendUnavailable(f"search request failed: {exc}") from exc
        if not 200 <= response.status_code < 300:
            raise BackendUnavailable(
                f"search endpoint returned HTTP {response.status_code}"
            )
        try:
            payload = response.json()
        except ValueError as exc:
            raise BackendUnavailable(f"malformed search response: {exc}") from exc
        if not isinstance(payload, dict):
            raise BackendUnavailable("malformed search response: not a JSON object")
        snippets = []
        for item in payload.get("items", []):
            snippet = item.get("snippet") if isinstance(item, dict) else None
            if isinstance(snippet, str) and snippet:
                snippets.append(snippet)
        return snippets[:top_k]
