from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from crowdqc.postqc import DuplicateReport, completion_time_filter, find_duplicates
from crowdqc.textkit import jaccard, ngrams, normalize


def _brute_force_clusters(responses, n, threshold):
    """O(N^2) single-linkage reference: repeatedly merge linked groups."""
    ids = [rid for rid, _ in responses]
    tokens = {rid: normalize(text) for rid, text in responses}
    grams = {rid: ngrams(tokens[rid], n) for rid in ids}
    groups = [{rid} for rid in ids]

    def linked(a, b):
        return tokens[a] == tokens[b] or jaccard(grams[a], grams[b]) >= threshold

    changed = True
    while changed:
        changed = False
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                if any(linked(a, b) for a in groups[i] for b in groups[j]):
                    groups[i] |= groups[j]
                    del groups[j]
                    changed = True
                    break
            if changed:
                break
    return sorted(tuple(sorted(g)) for g in groups if len(g) > 1)


class TestFindDuplicates:
    def test_disjoint_responses_rate_zero(self):
        report = find_duplicates(
            [("a", "one two three"), ("b", "four five six"), ("c", "seven eight nine")]
        )
        assert report.clusters == ()
        assert report.duplicate_rate == 0.0

    def test_two_identical_of_two(self):
        report = find_duplicates([("a", "same text here"), ("b", "same text here")])
        assert report.clusters == (("a", "b"),)
        assert report.duplicate_rate == 50.0

    def test_short_exact_duplicates_cluster(self):
        # two tokens is below the shingle width, but identical text must cluster
        report = find_duplicates([("a", "yes indeed"), ("b", "yes indeed")])
        assert report.clusters == (("a", "b"),)

    def test_near_duplicate_last_word_changed(self):
        text = " ".join(f"w{i}" for i in range(20))
        edited = " ".join(f"w{i}" for i in range(19)) + " different"
        report = find_duplicates([("a", text), ("b", edited)], threshold=0.8)
        assert report.clusters == (("a", "b"),)

    def test_empty_input(self):
        report = find_duplicates([])
        assert report == DuplicateReport(clusters=(), duplicate_rate=0.0, total=0)

    def test_threshold_validated(self):
        with pytest.raises(ValueError):
            find_duplicates([("a", "x")], threshold=0.0)

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError, match="duplicate response ids"):
            find_duplicates([("a", "x"), ("a", "y")])

    def test_matches_bruteforce_on_random_instances(self):
        rng = random.Random(20240)
        vocab = ["red", "blue", "green", "dot", "line", "grid", "spin", "flap"]
        for _ in range(60):
            responses = []
            for i in range(rng.randint(0, 10)):
                length = rng.randint(1, 8)
                text = " ".join(rng.choice(vocab) for _ in range(length))
                responses.append((f"r{i}", text))
            got = find_duplicates(responses, n=2, threshold=0.6)
            assert list(got.clusters) == _brute_force_clusters(responses, 2, 0.6)

    def test_order_invariant(self):
        responses = [
            ("a", "alpha beta gamma delta"),
            ("b", "alpha beta gamma delta"),
            ("c", "omega psi chi"),
            ("d", "unrelated words entirely"),
        ]
        forward = find_duplicates(responses)
        backward = find_duplicates(list(reversed(responses)))
        assert forward.clusters == backward.clusters
        assert forward.duplicate_rate == backward.duplicate_rate

    def test_adding_identical_response_increases_extras(self):
        base = [("a", "look at this sentence"), ("b", "another idea entirely")]
        with_dupe = base + [("c", "look at this sentence")]
        before = sum(len(c) - 1 for c in find_duplicates(base).clusters)
        after = sum(len(c) - 1 for c in find_duplicates(with_dupe).clusters)
        assert after == before + 1


class TestCompletionTimeFilter:
    def test_zero_minimum_flags_nothing(self):
        assert completion_time_filter([("a", 1.0), ("b", 0.0)], 0.0) == []

    def test_all_fast_all_flagged(self):
        pairs = [(f"r{i}", 1.0) for i in range(4)]
        assert completion_time_filter(pairs, 30.0) == [f"r{i}" for i in range(4)]

    @given(
        st.lists(
            st.tuples(st.integers(0, 99), st.floats(0, 100, allow_nan=False)),
            max_size=20,
        ),
        st.floats(0, 100, allow_nan=False),
    )
    def test_matches_bruteforce(self, raw, minimum):
        pairs = [(f"r{i}-{rid}", elapsed) for i, (rid, elapsed) in enumerate(raw)]
        expected = [rid for rid, elapsed in pairs if elapsed < minimum]
        assert completion_time_filter(pairs, minimum) == expected

    def test_negative_minimum_rejected(self):
        with pytest.raises(ValueError):
            completion_time_filter([], -1.0)
