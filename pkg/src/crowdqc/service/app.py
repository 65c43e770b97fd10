"""HTTP facade for the live study: validation, submission, metrics, workers.

All endpoints sit under /v1 and speak JSON. Validation responses are
evidence-free: the worker sees only the decision and a fixed message,
never the matched grams (those stay in the server event log).
"""
from __future__ import annotations

import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..pipeline import (
    CandidateResponse,
    ServiceDegraded,
    SessionClosed,
    degraded_accept_verdict,
    record_attempt,
    validate,
)
from ..prequal import IncompleteProfile, WorkerProfile, assign_qualifications, gate
from ..search import QueryCache, SearchBackend, utc_now
from ..textkit import Lexicon, lexical_validity, normalize
from .config import StudyConfig
from .store import EventLog, StudyState, submission_event, verdict_event


class ResponsePayload(BaseModel):
    worker_id: str = Field(min_length=1)
    question_id: str = Field(min_length=1)
    session_id: str = Field(min_length=1)
    text: str
    elapsed_seconds: float = Field(default=0.0, ge=0.0)

    def to_response(self) -> CandidateResponse:
        return CandidateResponse(
            worker_id=self.worker_id,
            question_id=self.question_id,
            session_id=self.session_id,
            text=self.text,
            elapsed_seconds=self.elapsed_seconds,
        )


class WorkerPayload(BaseModel):
    worker_id: str = Field(min_length=1)
    country: str | None = None
    approval_rate: float | None = None
    has_platform_masters: bool = False
    sex: str | None = None
    race: str | None = None
    ethnicity: str | None = None
    education: str | None = None
    age: int | None = None
    profession: str | None = None
    qual_answers: dict[str, str] = Field(default_factory=dict)


def _now_iso() -> str:
    return utc_now().isoformat()


def create_app(
    config: StudyConfig,
    backend: SearchBackend,
    lexicon: Lexicon,
    event_log_path: str | Path,
    cache: QueryCache | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="crowdqc", version="1")
    log = EventLog(event_log_path)
    state = StudyState(config)
    state.replay(log)
    cache = cache if cache is not None else QueryCache()

    app.state.study_state = state
    app.state.event_log = log
    app.state.backend = backend

    def record(event: dict) -> None:
        state.apply(event)
        log.append(event)

    @app.get("/v1/questions")
    def list_questions() -> dict:
        return {
            "study": {
                "paste_restriction_enabled": config.qc.paste_restriction_enabled,
                "search_check_enabled": config.qc.search_check_enabled,
                "quota": config.quota,
                "rewards": vars(config.rewards).copy(),
            },
            "questions": [
                {
                    "question_id": q.question_id,
                    "dsm_criterion": q.dsm_criterion,
                    "prompt": q.prompt,
                    "quota": config.quota,
                    "accepted": state.accepted_count(q.question_id),
                    "open": not state.quota_exhausted(q.question_id),
                }
                for q in config.questions
            ],
        }

    @app.post("/v1/validate")
    def validate_response(payload: ResponsePayload) -> dict:
        if config.question(payload.question_id) is None:
            raise HTTPException(404, f"unknown question {payload.question_id!r}")
        resp = payload.to_response()
        with state.lock:
            if state.quota_exhausted(resp.question_id):
                raise HTTPException(
                    409, f"question {resp.question_id!r} already has its quota"
                )
            existing = state.attempts.get(resp.session_key)
            if existing is not None and existing.finalized:
                raise HTTPException(409, "session already accepted a response")
            limit = config.qc.max_attempts
            if limit is not None and existing is not None and existing.attempts >= limit:
                raise HTTPException(409, "attempt limit reached for this session")

            try:
                verdict = validate(resp, config.qc, backend, lexicon, cache)
            except ServiceDegraded as exc:
                if not config.fail_open:
                    raise HTTPException(503, f"search backend unavailable: {exc}")
                validity = lexical_validity(normalize(resp.text), lexicon)
                verdict = degraded_accept_verdict(config.qc, validity)

            try:
                attempt_log = record_attempt(state.attempts, resp, verdict)
            except SessionClosed as exc:  # pragma: no cover - guarded above
                raise HTTPException(409, str(exc))
            event = verdict_event(resp, verdict, attempt_log.attempts, _now_iso())
            # state.apply would re-record the attempt; log only
            log.append(event)
        return {
            "decision": verdict.decision.value,
            "message": verdict.message,
            "attempts": attempt_log.attempts,
            "for_review": verdict.for_review,
        }

    @app.post("/v1/submit", status_code=201)
    def submit_response(payload: ResponsePayload) -> dict:
        if config.question(payload.question_id) is None:
            raise HTTPException(404, f"unknown question {payload.question_id!r}")
        resp = payload.to_response()
        with state.lock:
            if state.submission_for_session(resp.session_key) is not None:
                raise HTTPException(409, "this session already submitted")
            if state.submission_for_worker_question(resp.worker_id, resp.question_id):
                raise HTTPException(
                    409,
                    f"worker {resp.worker_id!r} already submitted "
                    f"question {resp.question_id!r}",
                )
            if state.quota_exhausted(resp.question_id):
                raise HTTPException(
                    409, f"question {resp.question_id!r} already has its quota"
                )
            attempt_log = state.attempts.get(resp.session_key)
            if attempt_log is None or not attempt_log.finalized:
                raise HTTPException(
                    412, "no accepted validation for this session; validate first"
                )
            event = submission_event(resp, uuid.uuid4().hex, _now_iso())
            record(event)
        return {
            "submission_id": event["submission_id"],
            "persisted_at": event["at"],
        }

    @app.get("/v1/metrics/attempts")
    def attempt_metrics() -> dict:
        return {"per_question": state.mean_attempts()}

    @app.get("/v1/submissions")
    def list_submissions() -> dict:
        return {
            "submissions": [
                vars(sub).copy()
                for _, sub in sorted(state.submissions.items())
            ]
        }

    @app.post("/v1/workers")
    def register_worker(payload: WorkerPayload) -> JSONResponse:
        try:
            profile = WorkerProfile(**payload.model_dump())
            result = gate(profile)
        except (ValueError, IncompleteProfile) as exc:
            raise HTTPException(400, f"malformed worker profile: {exc}")
        tags = assign_qualifications(profile) if result.accepted else frozenset()
        with state.lock:
            event = {
                "type": "worker_registered",
                "worker_id": profile.worker_id,
                "accepted": result.accepted,
                "failed": list(result.failed),
                "reasons": list(result.reasons),
                "qualifications": sorted(tag.value for tag in tags),
                "profile": payload.model_dump(),
                "at": _now_iso(),
            }
            record(event)
        return JSONResponse(
            {
                "worker_id": profile.worker_id,
                "accepted": result.accepted,
                "failed": event["failed"],
                "reasons": event["reasons"],
                "qualifications": event["qualifications"],
            }
        )

    @app.get("/v1/workers/{worker_id}/qualifications")
    def worker_qualifications(worker_id: str) -> dict:
        record_ = state.workers.get(worker_id)
        if record_ is None:
            raise HTTPException(404, f"unknown worker {worker_id!r}")
        return {
            "worker_id": worker_id,
            "accepted": record_.accepted,
            "qualifications": list(record_.qualifications),
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
