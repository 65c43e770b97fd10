"""Post-collection response screening: near-duplicate clusters, timing flags."""
from __future__ import annotations

from dataclasses import dataclass

from ..pipeline import CandidateResponse
from ..textkit import jaccard, ngrams, normalize


@dataclass(frozen=True)
class DuplicateReport:
    clusters: tuple[tuple[str, ...], ...]
    duplicate_rate: float
    total: int


class _UnionFind:
    def __init__(self, items):
        self._parent = {item: item for item in items}

    def find(self, item):
        root = item
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[item] != root:
            self._parent[item], item = root, self._parent[item]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[rb] = ra


def find_duplicates(
    responses: list[tuple[str, str]],
    n: int = 3,
    threshold: float = 0.8,
) -> DuplicateReport:
    """Cluster near-duplicate responses by shingle Jaccard, single linkage.

    Two responses link when their n-gram Jaccard reaches the threshold or
    their normalized token sequences are identical (so exact duplicates
    cluster even when shorter than n tokens). The duplicate rate is
    100 * sum(cluster size - 1) / N: the share of responses that add no
    new content.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    ids = [rid for rid, _ in responses]
    if len(set(ids)) != len(ids):
        seen, dupes = set(), set()
        for rid in ids:
            (dupes if rid in seen else seen).add(rid)
        raise ValueError(f"duplicate response ids: {sorted(dupes)}")
    if not responses:
        return DuplicateReport(clusters=(), duplicate_rate=0.0, total=0)

    tokens = {rid: normalize(text) for rid, text in responses}
    shingles = {rid: ngrams(tokens[rid], n) for rid in ids}
    uf = _UnionFind(ids)
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if tokens[a] == tokens[b] or jaccard(shingles[a], shingles[b]) >= threshold:
                uf.union(a, b)

    groups: dict[str, list[str]] = {}
    for rid in ids:
        groups.setdefault(uf.find(rid), []).append(rid)
    clusters = sorted(
        (tuple(sorted(members)) for members in groups.values() if len(members) > 1),
    )
    extras = sum(len(cluster) - 1 for cluster in clusters)
    return DuplicateReport(
        clusters=tuple(clusters),
        duplicate_rate=100.0 * extras / len(responses),
        total=len(responses),
    )


def completion_time_filter(
    responses: list[tuple[str, float]], min_seconds: float
) -> list[str]:
    """Ids of responses composed faster than min_seconds, in input order."""
    if min_seconds < 0:
        raise ValueError("min_seconds must be >= 0")
    return [rid for rid, elapsed in responses if elapsed < min_seconds]


def flag_fast_sessions(
    responses: list[CandidateResponse], min_seconds: float
) -> list[str]:
    """completion_time_filter over live responses, keyed worker:question:session."""
    pairs = [(":".join(r.session_key), r.elapsed_seconds) for r in responses]
    return completion_time_filter(pairs, min_seconds)
