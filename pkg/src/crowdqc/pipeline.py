"""Real-time response screening: gibberish gate, search, shingle congruence.

The verdict pipeline runs in strict order: (1) score lexicon validity and
reject gibberish without ever touching the search backend; (2) search for
the response text and pull the surface text out of the results; (3) reject
as copied when response and surface text share at least one n-gram.
Backend failures surface as ServiceDegraded so the caller can decide
whether to fail open or closed — they are never silently mapped to a
verdict.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum

from .search import (
    BackendUnavailable,
    QueryCache,
    SearchBackend,
    SearchConfig,
    query,
    surface_text,
    utc_now,
)
from .textkit import Lexicon, NGramSet, lexical_validity, ngrams, normalize, shared_ngrams


class Decision(str, Enum):
    ACCEPT = "accept"
    REJECT_GIBBERISH = "reject_gibberish"
    REJECT_COPIED = "reject_copied"

    def is_reject(self) -> bool:
        return self is not Decision.ACCEPT


ACCEPT_MESSAGE = "Response accepted."
GIBBERISH_MESSAGE = (
    "Your response could not be recognized as coherent text. "
    "Please re-enter your answer in your own words."
)
COPIED_MESSAGE = (
    "Your response matches published text too closely. "
    "Please re-enter your answer in your own words."
)


class ServiceDegraded(Exception):
    """The search backend failed; no verdict could be produced."""


class SessionClosed(Exception):
    """A validation arrived for a session that already accepted a response."""


@dataclass(frozen=True)
class CandidateResponse:
    worker_id: str
    question_id: str
    session_id: str
    text: str
    elapsed_seconds: float = 0.0
    submitted_at: datetime = field(default_factory=utc_now)

    def __post_init__(self) -> None:
        for name in ("worker_id", "question_id", "session_id"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be non-empty")
        if self.elapsed_seconds < 0:
            raise ValueError("elapsed_seconds must be >= 0")

    @property
    def session_key(self) -> tuple[str, str, str]:
        return (self.worker_id, self.question_id, self.session_id)


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    shared: NGramSet
    validity: float
    message: str
    for_review: bool = False

    def __post_init__(self) -> None:
        if (self.decision is Decision.REJECT_COPIED) != bool(self.shared):
            raise ValueError("shared-gram evidence must accompany exactly the copied verdict")
        if self.decision.is_reject() and not self.message:
            raise ValueError("rejections must carry a worker-facing message")


@dataclass(frozen=True)
class QCConfig:
    """Pipeline knobs, including the experiment toggles.

    A paste-restriction-only study runs with search_check_enabled=False;
    a search-only study leaves paste_restriction_enabled=False; the
    combined condition turns both on.
    """

    n: int = 3
    gibberish_threshold: float = 0.5
    empty_result_policy: str = "accept"  # or "reject_as_gibberish"
    search_check_enabled: bool = True
    paste_restriction_enabled: bool = False
    min_completion_seconds: float = 0.0
    min_shared_grams: int = 1
    max_attempts: int | None = None
    search: SearchConfig = field(default_factory=SearchConfig)
    gibberish_message: str = GIBBERISH_MESSAGE
    copied_message: str = COPIED_MESSAGE

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.gibberish_threshold <= 1.0:
            raise ValueError("gibberish_threshold must be in [0, 1]")
        if self.empty_result_policy not in ("accept", "reject_as_gibberish"):
            raise ValueError(f"unknown empty_result_policy {self.empty_result_policy!r}")
        if self.min_shared_grams < 1:
            raise ValueError("min_shared_grams must be >= 1")
        if self.max_attempts is not None and self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1 or None")


def validate(
    resp: CandidateResponse,
    cfg: QCConfig,
    backend: SearchBackend,
    lexicon: Lexicon,
    cache: QueryCache | None = None,
) -> Verdict:
    """Screen one response and return the verdict with its evidence."""
    tokens = normalize(resp.text)
    validity = lexical_validity(tokens, lexicon)
    empty_evidence = NGramSet(n=cfg.n)

    if validity < cfg.gibberish_threshold:
        return Verdict(Decision.REJECT_GIBBERISH, empty_evidence, validity, cfg.gibberish_message)

    if not cfg.search_check_enabled:
        return Verdict(Decision.ACCEPT, empty_evidence, validity, ACCEPT_MESSAGE)

    try:
        results = query(backend, resp.text, cfg.search, cache)
    except BackendUnavailable as exc:
        raise ServiceDegraded(str(exc)) from exc

    if results.is_empty():
        if cfg.empty_result_policy == "reject_as_gibberish":
            return Verdict(
                Decision.REJECT_GIBBERISH, empty_evidence, validity, cfg.gibberish_message
            )
        return Verdict(Decision.ACCEPT, empty_evidence, validity, ACCEPT_MESSAGE)

    shared = shared_ngrams(
        ngrams(tokens, cfg.n),
        ngrams(normalize(surface_text(results)), cfg.n),
    )
    if len(shared) >= cfg.min_shared_grams:
        return Verdict(Decision.REJECT_COPIED, shared, validity, cfg.copied_message)
    return Verdict(Decision.ACCEPT, empty_evidence, validity, ACCEPT_MESSAGE)


@dataclass
class AttemptLog:
    """Per-session record of validation outcomes, in arrival order."""

    worker_id: str
    question_id: str
    session_id: str
    outcomes: list[Decision] = field(default_factory=list)

    @property
    def finalized(self) -> bool:
        return bool(self.outcomes) and self.outcomes[-1] is Decision.ACCEPT

    @property
    def attempts(self) -> int:
        """Rejected validations before the accepted one (so far, if open)."""
        return sum(1 for d in self.outcomes if d.is_reject())


class AttemptTracker:
    """Session-keyed store of attempt logs.

    Distinct sessions may record concurrently; recording for one session
    must come from a single writer at a time.
    """

    def __init__(self) -> None:
        self._logs: dict[tuple[str, str, str], AttemptLog] = {}
        self._lock = threading.Lock()

    def _log_for(self, resp: CandidateResponse) -> AttemptLog:
        with self._lock:
            log = self._logs.get(resp.session_key)
            if log is None:
                log = AttemptLog(resp.worker_id, resp.question_id, resp.session_id)
                self._logs[resp.session_key] = log
            return log

    def get(self, session_key: tuple[str, str, str]) -> AttemptLog | None:
        with self._lock:
            return self._logs.get(session_key)

    def logs(self) -> list[AttemptLog]:
        with self._lock:
            return list(self._logs.values())

    def mean_attempts_by_question(self) -> dict[str, float]:
        """Mean rejects-before-success per question, over finalized sessions."""
        sums: dict[str, list[int]] = {}
        for log in self.logs():
            if log.finalized:
                sums.setdefault(log.question_id, []).append(log.attempts)
        return {q: sum(values) / len(values) for q, values in sums.items()}


def record_attempt(tracker: AttemptTracker, resp: CandidateResponse, verdict: Verdict) -> AttemptLog:
    """Append one verdict to the response's session log.

    Raises SessionClosed when the session already holds an Accept:
    accepted sessions are final.
    """
    log = tracker._log_for(resp)
    if log.finalized:
        raise SessionClosed(
            f"session {resp.session_id!r} already accepted a response "
            f"for question {resp.question_id!r}"
        )
    log.outcomes.append(verdict.decision)
    return log


def degraded_accept_verdict(cfg: QCConfig, validity: float = 1.0) -> Verdict:
    """Fail-open verdict used when the backend is down: accept, but flag."""
    return Verdict(Decision.ACCEPT, NGramSet(n=cfg.n), validity, ACCEPT_MESSAGE, for_review=True)


def with_search_config(cfg: QCConfig, search: SearchConfig) -> QCConfig:
    return replace(cfg, search=search)
