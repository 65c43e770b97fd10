"""Study configuration: questions, quotas, QC knobs, backend wiring.

A study file is JSON or TOML. Relative paths inside it (corpus, lexicon)
resolve against the file's own directory. The live-API key is never put
in the file; only the name of the environment variable that holds it is.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from ..pipeline import QCConfig
from ..search import (
    HttpSearchBackend,
    OfflineSearchBackend,
    QueryCache,
    SearchBackend,
    SearchConfig,
    build_index,
    load_corpus_jsonl,
)
from ..textkit import Lexicon, default_lexicon

try:  # tomllib ships with 3.11+; tolerate its absence on 3.10
    import tomllib  # type: ignore[import-not-found]
except ImportError:  # pragma: no cover
    try:
        import tomli as tomllib  # type: ignore[import-not-found, no-redef]
    except ImportError:
        tomllib = None  # type: ignore[assignment]


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class Question:
    question_id: str
    dsm_criterion: str
    prompt: str


@dataclass(frozen=True)
class Rewards:
    qualification: float = 0.10
    per_question: float = 0.40
    currency: str = "USD"


@dataclass(frozen=True)
class BackendSpec:
    kind: str = "offline"  # or "http"
    corpus: Path | None = None
    endpoint: str = "https://www.googleapis.com/customsearch/v1"
    engine_id: str = ""
    api_key_env: str = "SEARCH_API_KEY"
    rate_per_second: float = 10.0
    cache_max_entries: int | None = None


@dataclass(frozen=True)
class StudyConfig:
    questions: tuple[Question, ...]
    qc: QCConfig = field(default_factory=QCConfig)
    quota: int = 10
    rewards: Rewards = field(default_factory=Rewards)
    backend: BackendSpec = field(default_factory=BackendSpec)
    lexicon_path: Path | None = None
    fail_open: bool = True

    def __post_init__(self) -> None:
        if self.quota < 1:
            raise ConfigError("quota must be >= 1")
        ids = [q.question_id for q in self.questions]
        if len(set(ids)) != len(ids):
            raise ConfigError("question ids must be unique")

    def question(self, question_id: str) -> Question | None:
        for q in self.questions:
            if q.question_id == question_id:
                return q
        return None


def _read_config_payload(path: Path) -> dict:
    if path.suffix.lower() == ".toml":
        if tomllib is None:
            raise ConfigError(
                "TOML configs need Python 3.11+ or the tomli package; "
                "use a JSON config instead"
            )
        with path.open("rb") as fh:
            return tomllib.load(fh)
    with path.open(encoding="utf-8") as fh:
        return json.load(fh)


def load_study_config(path: str | Path) -> StudyConfig:
    path = Path(path)
    try:
        payload = _read_config_payload(path)
    except (json.JSONDecodeError, ValueError) as exc:
        raise ConfigError(f"{path}: cannot parse config: {exc}") from exc

    def resolve(value: str | None) -> Path | None:
        if value is None:
            return None
        candidate = Path(value)
        return candidate if candidate.is_absolute() else path.parent / candidate

    try:
        questions = tuple(
            Question(q["id"], q.get("dsm_criterion", ""), q["prompt"])
            for q in payload["questions"]
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"{path}: bad questions list: {exc}") from exc

    backend_payload = dict(payload.get("backend", {}))
    backend_kind = backend_payload.pop("kind", "offline")
    if backend_kind not in ("offline", "http"):
        raise ConfigError(f"{path}: unknown backend kind {backend_kind!r}")
    corpus = resolve(backend_payload.pop("corpus", None))
    if backend_kind == "offline" and corpus is None:
        raise ConfigError(f"{path}: offline backend needs a corpus path")

    qc_payload = dict(payload.get("qc", {}))
    if "empty_result_policy" not in qc_payload and backend_kind == "http":
        # A blank live result page is the gibberish signal; sparse desk
        # corpora return blanks for honest answers all the time.
        qc_payload["empty_result_policy"] = "reject_as_gibberish"
    search_payload = qc_payload.pop("search", {})
    try:
        qc = QCConfig(search=SearchConfig(**search_payload), **qc_payload)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{path}: bad qc section: {exc}") from exc

    try:
        return StudyConfig(
            questions=questions,
            qc=qc,
            quota=int(payload.get("quota", 10)),
            rewards=Rewards(**payload.get("rewards", {})),
            backend=BackendSpec(kind=backend_kind, corpus=corpus, **backend_payload),
            lexicon_path=resolve(payload.get("lexicon")),
            fail_open=bool(payload.get("fail_open", True)),
        )
    except TypeError as exc:
        raise ConfigError(f"{path}: bad config: {exc}") from exc


def build_backend(spec: BackendSpec) -> SearchBackend:
    if spec.kind == "offline":
        return OfflineSearchBackend(build_index(load_corpus_jsonl(spec.corpus)))
    api_key = os.environ.get(spec.api_key_env, "")
    if not api_key:
        raise ConfigError(
            f"backend needs an API key in ${spec.api_key_env} (unset or empty)"
        )
    return HttpSearchBackend(
        endpoint=spec.endpoint,
        api_key=api_key,
        engine_id=spec.engine_id,
        rate_per_second=spec.rate_per_second,
    )


def build_cache(spec: BackendSpec) -> QueryCache:
    return QueryCache(max_entries=spec.cache_max_entries)


def load_lexicon(config: StudyConfig) -> Lexicon:
    if config.lexicon_path is None:
        return default_lexicon()
    return Lexicon.from_file(config.lexicon_path)
