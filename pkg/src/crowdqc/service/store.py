"""Append-only event log and the replayable in-memory study state.

Every state change is an event dict: applied to StudyState first, then
appended to the log. Recovery replays the log through the same apply
path, so a restarted service reconstructs byte-for-byte identical state.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..pipeline import AttemptTracker, CandidateResponse, Decision, Verdict, record_attempt
from .config import StudyConfig


class EventLog:
    """One JSON object per line, flushed per append."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def append(self, event: dict) -> None:
        line = json.dumps(event, sort_keys=True, ensure_ascii=False)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()

    def events(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(json.loads(line))
        return out


@dataclass(frozen=True)
class StoredSubmission:
    submission_id: str
    worker_id: str
    question_id: str
    session_id: str
    text: str
    elapsed_seconds: float
    persisted_at: str


@dataclass
class WorkerRecord:
    worker_id: str
    accepted: bool
    failed: tuple[str, ...]
    reasons: tuple[str, ...]
    qualifications: tuple[str, ...]
    profile: dict = field(default_factory=dict)


class StudyState:
    """Mutable view of one study, rebuilt from the event log on start."""

    def __init__(self, config: StudyConfig):
        self.config = config
        self.attempts = AttemptTracker()
        self.workers: dict[str, WorkerRecord] = {}
        self.submissions: dict[str, StoredSubmission] = {}
        self._by_session: dict[tuple[str, str, str], str] = {}
        self._by_worker_question: dict[tuple[str, str], str] = {}
        self._accepted_count: dict[str, int] = {
            q.question_id: 0 for q in config.questions
        }
        self.lock = threading.Lock()

    # --- queries ---------------------------------------------------------

    def accepted_count(self, question_id: str) -> int:
        return self._accepted_count.get(question_id, 0)

    def quota_exhausted(self, question_id: str) -> bool:
        return self.accepted_count(question_id) >= self.config.quota

    def submission_for_session(self, key: tuple[str, str, str]) -> StoredSubmission | None:
        sid = self._by_session.get(key)
        return self.submissions.get(sid) if sid else None

    def submission_for_worker_question(
        self, worker_id: str, question_id: str
    ) -> StoredSubmission | None:
        sid = self._by_worker_question.get((worker_id, question_id))
        return self.submissions.get(sid) if sid else None

    def mean_attempts(self) -> dict[str, float]:
        means = {q.question_id: 0.0 for q in self.config.questions}
        means.update(self.attempts.mean_attempts_by_question())
        return means

    def snapshot(self) -> dict:
        """Deterministic digest of the mutable state, for replay audits."""
        return {
            "submissions": {
                sid: vars(sub).copy() for sid, sub in sorted(self.submissions.items())
            },
            "accepted_count": dict(sorted(self._accepted_count.items())),
            "attempt_logs": sorted(
                (log.worker_id, log.question_id, log.session_id,
                 [d.value for d in log.outcomes])
                for log in self.attempts.logs()
            ),
            "workers": {
                wid: {
                    "accepted": rec.accepted,
                    "failed": list(rec.failed),
                    "reasons": list(rec.reasons),
                    "qualifications": list(rec.qualifications),
                }
                for wid, rec in sorted(self.workers.items())
            },
        }

    # --- event application ----------------------------------------------

    def apply(self, event: dict) -> None:
        kind = event["type"]
        if kind == "validation":
            resp = CandidateResponse(
                worker_id=event["worker_id"],
                question_id=event["question_id"],
                session_id=event["session_id"],
                text=event["text"],
                elapsed_seconds=event.get("elapsed_seconds", 0.0),
            )
            decision = Decision(event["decision"])
            verdict_like = _ReplayVerdict(decision)
            record_attempt(self.attempts, resp, verdict_like)
        elif kind == "submission":
            sub = StoredSubmission(
                submission_id=event["submission_id"],
                worker_id=event["worker_id"],
                question_id=event["question_id"],
                session_id=event["session_id"],
                text=event["text"],
                elapsed_seconds=event.get("elapsed_seconds", 0.0),
                persisted_at=event["at"],
            )
            self.submissions[sub.submission_id] = sub
            key = (sub.worker_id, sub.question_id, sub.session_id)
            self._by_session[key] = sub.submission_id
            self._by_worker_question[(sub.worker_id, sub.question_id)] = sub.submission_id
            self._accepted_count[sub.question_id] = (
                self._accepted_count.get(sub.question_id, 0) + 1
            )
        elif kind == "worker_registered":
            self.workers[event["worker_id"]] = WorkerRecord(
                worker_id=event["worker_id"],
                accepted=event["accepted"],
                failed=tuple(event.get("failed", ())),
                reasons=tuple(event.get("reasons", ())),
                qualifications=tuple(event.get("qualifications", ())),
                profile=event.get("profile", {}),
            )
        else:
            raise ValueError(f"unknown event type {kind!r}")

    def replay(self, log: EventLog) -> int:
        count = 0
        for event in log.events():
            self.apply(event)
            count += 1
        return count


class _ReplayVerdict:
    """Just enough of a Verdict for attempt recording."""

    def __init__(self, decision: Decision):
        self.decision = decision


def verdict_event(resp: CandidateResponse, verdict: Verdict, attempts: int, at: str) -> dict:
    return {
        "type": "validation",
        "worker_id": resp.worker_id,
        "question_id": resp.question_id,
        "session_id": resp.session_id,
        "text": resp.text,
        "elapsed_seconds": resp.elapsed_seconds,
        "decision": verdict.decision.value,
        "validity": verdict.validity,
        "message": verdict.message,
        "for_review": verdict.for_review,
        # evidence stays server-side; clients never see shared grams
        "shared": sorted(list(gram) for gram in verdict.shared.grams),
        "attempts": attempts,
        "at": at,
    }


def submission_event(
    resp: CandidateResponse, submission_id: str, at: str
) -> dict:
    return {
        "type": "submission",
        "submission_id": submission_id,
        "worker_id": resp.worker_id,
        "question_id": resp.question_id,
        "session_id": resp.session_id,
        "text": resp.text,
        "elapsed_seconds": resp.elapsed_seconds,
        "at": at,
    }
