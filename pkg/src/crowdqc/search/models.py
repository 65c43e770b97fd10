"""Shared types for the search backends."""
from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Protocol, runtime_checkable

from ..textkit import Tokens


class BackendUnavailable(Exception):
    """The search backend could not answer (transport / protocol failure).

    Distinct from an empty result set, which is a perfectly valid answer.
    """


@dataclass(frozen=True)
class SearchQuery:
    raw_text: str
    effective_terms: Tokens


@dataclass(frozen=True)
class SearchResultSet:
    query: SearchQuery
    snippets: tuple[str, ...]
    backend_id: str
    retrieved_at: datetime

    def is_empty(self) -> bool:
        return not self.snippets


@dataclass(frozen=True)
class CorpusDocument:
    doc_id: str
    body: str

    def __post_init__(self) -> None:
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")
        if not self.body:
            raise ValueError(f"document {self.doc_id!r} has an empty body")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for query construction and result size."""

    max_query_tokens: int = 32
    top_k: int = 5

    def __post_init__(self) -> None:
        if self.max_query_tokens < 1:
            raise ValueError("max_query_tokens must be >= 1")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")


@runtime_checkable
class SearchBackend(Protocol):
    """Anything that can turn query terms into an ordered snippet list."""

    backend_id: str

    def fetch(self, terms: Tokens, top_k: int) -> list[str]: ...


def surface_text(results: SearchResultSet) -> str:
    """Join the retrieved snippets into one comparison string.

    Empty result sets yield "" (the no-evidence case).
    """
    return " ".join(results.snippets)


def utc_now() -> datetime:
    return datetime.now(timezone.utc)
