"""Deterministic offline search over a fixed document corpus.

An inverted index maps tokens to document ids. Queries rank documents by
the number of distinct query tokens they contain (descending), breaking
ties by doc_id, and return the top-k document bodies as snippets.
Documents sharing no token with the query are never returned.
"""
from __future__ import annotations

import json
from pathlib import Path

from ..textkit import Tokens, normalize
from .models import CorpusDocument


class CorpusIndex:
    """Immutable token -> doc_ids index plus document bodies."""

    def __init__(self, docs: list[CorpusDocument]):
        postings: dict[str, set[str]] = {}
        bodies: dict[str, str] = {}
        for doc in docs:
            if doc.doc_id in bodies:
                raise ValueError(f"duplicate doc_id {doc.doc_id!r} in corpus")
            bodies[doc.doc_id] = doc.body
            for token in set(normalize(doc.body)):
                postings.setdefault(token, set()).add(doc.doc_id)
        self._postings = postings
        self._bodies = bodies

    def __len__(self) -> int:
        return len(self._bodies)

    def body(self, doc_id: str) -> str:
        return self._bodies[doc_id]

    def doc_ids_for(self, token: str) -> frozenset[str]:
        return frozenset(self._postings.get(token, ()))

    def rank(self, terms: Tokens) -> list[tuple[str, int]]:
        """(doc_id, distinct-shared-token count) pairs, best first."""
        scores: dict[str, int] = {}
        for token in set(terms):
            for doc_id in self._postings.get(token, ()):
                scores[doc_id] = scores.get(doc_id, 0) + 1
        return sorted(scores.items(), key=lambda item: (-item[1], item[0]))

    def to_json(self) -> str:
        docs = [
            {"doc_id": doc_id, "body": body}
            for doc_id, body in sorted(self._bodies.items())
        ]
        return json.dumps({"format": "crowdqc-index/1", "docs": docs}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CorpusIndex":
        payload = json.loads(text)
        if payload.get("format") != "crowdqc-index/1":
            raise ValueError("not a crowdqc index file")
        docs = [CorpusDocument(d["doc_id"], d["body"]) for d in payload["docs"]]
        return cls(docs)


def build_index(docs: list[CorpusDocument]) -> CorpusIndex:
    return CorpusIndex(docs)


def load_corpus_jsonl(path: str | Path) -> list[CorpusDocument]:
    """Read a corpus file: one JSON object {doc_id, body} per line."""
    docs = []
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                docs.append(CorpusDocument(record["doc_id"], record["body"]))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise ValueError(f"{path}:{lineno}: bad corpus record: {exc}") from exc
    return docs


class OfflineSearchBackend:
    """Search backend answering from a CorpusIndex.

    Snippets are full document bodies: corpora here are short, and
    windowing would change nothing downstream.
    """

    def __init__(self, index: CorpusIndex, backend_id: str = "offline"):
        self.index = index
        self.backend_id = backend_id
        self.fetch_count = 0

    def fetch(self, terms: Tokens, top_k: int) -> list[str]:
        self.fetch_count += 1
        ranked = self.index.rank(terms)
        return [self.index.body(doc_id) for doc_id, _ in ranked[:top_k]]
