"""Pluggable snippet retrieval: offline corpus index or live HTTP API."""
from __future__ import annotations

from ..textkit import normalize
from .cache import QueryCache
from .http import HttpSearchBackend, RateLimiter
from .models import (
    BackendUnavailable,
    CorpusDocument,
    SearchBackend,
    SearchConfig,
    SearchQuery,
    SearchResultSet,
    surface_text,
    utc_now,
)
from .offline import CorpusIndex, OfflineSearchBackend, build_index, load_corpus_jsonl

__all__ = [
    "BackendUnavailable",
    "CorpusDocument",
    "CorpusIndex",
    "HttpSearchBackend",
    "OfflineSearchBackend",
    "QueryCache",
    "RateLimiter",
    "SearchBackend",
    "SearchConfig",
    "SearchQuery",
    "SearchResultSet",
    "build_index",
    "load_corpus_jsonl",
    "query",
    "surface_text",
    "utc_now",
]


def query(
    backend: SearchBackend,
    text: str,
    cfg: SearchConfig | None = None,
    cache: QueryCache | None = None,
) -> SearchResultSet:
    """Run one search for `text` and wrap the answer.

    The query is the normalized text truncated to the first
    `cfg.max_query_tokens` tokens. When a cache is supplied, a repeated
    query is answered from it without touching the backend.
    """
    cfg = cfg or SearchConfig()
    terms = normalize(text)[: cfg.max_query_tokens]
    search_query = SearchQuery(raw_text=text, effective_terms=terms)
    key = " ".join(terms)

    snippets: tuple[str, ...] | None = None
    if cache is not None:
        snippets = cache.get(key)
    if snippets is None:
        snippets = tuple(backend.fetch(terms, cfg.top_k))
        if cache is not None:
            cache.put(key, snippets)
    return SearchResultSet(
        query=search_query,
        snippets=snippets,
        backend_id=backend.backend_id,
        retrieved_at=utc_now(),
    )
