"""Acceptance suite: one test per release criterion, with stated tolerances.

Each test prints a [PASS] line (visible with pytest -s; pytest -v shows
the same per-criterion outcome by test name). Time budgets are asserted
inside the tests.
"""
from __future__ import annotations

import random
import time

import pytest
import scipy.stats
from fastapi.testclient import TestClient

from crowdqc.io import load_expert_csv, load_labeled_responses, load_roster
from crowdqc.pipeline import CandidateResponse, Decision, QCConfig, validate
from crowdqc.postqc import aggregate_expert, anova_oneway, cohens_kappa, find_duplicates
from crowdqc.prequal import summarize_demographics
from crowdqc.robustness import run_robustness
from crowdqc.search import (
    CorpusDocument,
    OfflineSearchBackend,
    SearchConfig,
    build_index,
    query,
    surface_text,
)
from crowdqc.service import Question, StudyConfig, create_app
from crowdqc.textkit import lexical_validity, ngrams, normalize, shared_ngrams

from conftest import EXPECTED_SHARED, RESPONSE_TEXT, SOURCE_TEXT


def _timed(budget_seconds: float):
    start = time.monotonic()

    def check():
        elapsed = time.monotonic() - start
        assert elapsed < budget_seconds, f"budget {budget_seconds}s exceeded: {elapsed:.2f}s"
        return elapsed

    return check


def test_criterion_01_worked_copy_pair(fixture_lexicon):
    done = _timed(1.0)
    shared = shared_ngrams(
        ngrams(normalize(RESPONSE_TEXT), 3),
        ngrams(normalize(SOURCE_TEXT), 3),
    )
    assert shared.grams == EXPECTED_SHARED

    backend = OfflineSearchBackend(build_index([CorpusDocument("src", SOURCE_TEXT)]))
    resp = CandidateResponse(
        worker_id="w", question_id="q", session_id="s", text=RESPONSE_TEXT
    )
    verdict = validate(resp, QCConfig(), backend, fixture_lexicon)
    assert verdict.decision is Decision.REJECT_COPIED
    assert verdict.shared.grams == EXPECTED_SHARED
    done()
    print("\n[PASS] criterion 1: copy pair yields exactly the 2 expected trigrams and RejectCopied")


def test_criterion_02_robustness_protocol(fixtures_dir, fixture_backend, fixture_lexicon):
    done = _timed(5.0)
    items = load_labeled_responses(fixtures_dir / "robustness_items.jsonl")
    cfg = QCConfig()
    report = run_robustness(items, cfg, fixture_backend, fixture_lexicon)

    assert report.per_category["Copied"].total == 29
    assert report.flagged_ids("Copied") == {
        i.question_id for i in items if i.category == "Copied"
    }
    assert report.per_category["Authentic"].total == 29
    assert report.flagged_ids("Authentic") == frozenset()

    paraphrased = [i for i in items if i.category == "Paraphrased"]
    assert len(paraphrased) == 29
    oracle_flags = set()
    for item in paraphrased:
        surface = surface_text(query(fixture_backend, item.text, cfg.search))
        if ngrams(normalize(item.text), cfg.n).grams & ngrams(normalize(surface), cfg.n).grams:
            oracle_flags.add(item.question_id)
    assert report.flagged_ids("Paraphrased") == oracle_flags
    elapsed = done()
    print(
        f"\n[PASS] criterion 2: 29/29 copied flagged, 0/29 authentic flagged, "
        f"paraphrase flags == oracle ({len(oracle_flags)}/29) in {elapsed:.2f}s"
    )


def test_criterion_03_expert_table(fixtures_dir):
    summary = aggregate_expert(load_expert_csv(fixtures_dir / "expert_ratings.csv"))
    assert summary.averages["typical"] == pytest.approx(3.88, abs=0.005)
    assert summary.averages["normal"] == pytest.approx(2.12, abs=0.005)
    assert summary.averages["not_typical"] == pytest.approx(1.44, abs=0.005)
    assert summary.averages["ehr_match"] == pytest.approx(4.40, abs=0.005)
    assert summary.total_count == 175
    assert summary.total_unintelligible == 79
    assert summary.total_intelligible == 96
    assert summary.total_exact_match == 72
    print("\n[PASS] criterion 3: expert averages 3.88/2.12/1.44/4.40 and totals 175/79/96/72")


def test_criterion_04_demographics_strings(fixtures_dir):
    summary = summarize_demographics(load_roster(fixtures_dir / "roster.jsonl"))
    assert summary.n == 26
    expected = {
        ("sex", "Female"): "53.9 (14)",
        ("sex", "Male"): "46.2 (12)",
        ("race", "American Indian or Alaska Native"): "0.0 (0)",
        ("race", "Asian"): "7.7 (2)",
        ("race", "Black or African-American"): "11.5 (3)",
        ("race", "White"): "76.9 (20)",
        ("ethnicity", "Hispanic or Latino"): "3.9 (1)",
        # 25/26 prints 96.2 under the declared rounding; the lone cell
        # where the reference table's own rounding is self-inconsistent
        # (it prints 46.2 for 12/26 but 96.1 for 25/26).
        ("ethnicity", "Not Hispanic or Latino"): "96.2 (25)",
        ("education", "Less than high school degree"): "0.0 (0)",
        ("education", "High school diploma"): "11.5 (3)",
        ("education", "Associate degree"): "11.5 (3)",
        ("education", "Bachelor's degree"): "46.2 (12)",
        ("education", "Master's degree"): "30.8 (8)",
        ("education", "Doctoral degree"): "0.0 (0)",
    }
    for (variable, choice), cell in expected.items():
        assert summary.cell(variable, choice) == cell, (variable, choice)
    assert f"{summary.age_mean:.1f}" == "42.5"
    assert round(round(summary.age_sd, 2), 1) == 13.4
    assert (summary.age_min, summary.age_max) == (23, 70)
    print("\n[PASS] criterion 4: cohort summary reproduces the published percent strings")


def test_criterion_05_statistics_oracles():
    done = _timed(10.0)
    rng = random.Random(1234)

    # kappa vs the direct formula on 1000 random binary pairs
    for _ in range(1000):
        n = rng.randint(1, 200)
        r1 = [rng.randint(0, 1) for _ in range(n)]
        r2 = [rng.randint(0, 1) for _ in range(n)]
        p_o = sum(1 for a, b in zip(r1, r2) if a == b) / n
        p_e = sum((r1.count(c) / n) * (r2.count(c) / n) for c in (0, 1))
        result = cohens_kappa(r1, r2)
        assert result.p_o == pytest.approx(p_o, abs=1e-12)
        assert result.p_e == pytest.approx(p_e, abs=1e-12)
        if p_o == 1.0:
            assert result.kappa == 1.0
        else:
            assert result.kappa == pytest.approx((p_o - p_e) / (1 - p_e), abs=1e-9)

    # two-group ANOVA F equals the equal-variance t statistic squared
    checked = 0
    for _ in range(1000):
        n1, n2 = rng.randint(2, 30), rng.randint(2, 30)
        g1 = [rng.gauss(0.0, 1.0) for _ in range(n1)]
        g2 = [rng.gauss(0.5, 1.5) for _ in range(n2)]
        result = anova_oneway([g1, g2])
        t_stat, t_p = scipy.stats.ttest_ind(g1, g2, equal_var=True)
        assert result.f == pytest.approx(t_stat**2, abs=1e-9)
        assert result.p == pytest.approx(t_p, abs=1e-9)
        checked += 1
    assert checked == 1000

    identical = anova_oneway([[3.0, 4.0, 5.0], [3.0, 4.0, 5.0]])
    assert identical.f == 0.0 and identical.p == 1.0
    elapsed = done()
    print(f"\n[PASS] criterion 5: kappa and ANOVA match oracles on 2000 cases in {elapsed:.2f}s")


def test_criterion_06_ngram_oracles():
    done = _timed(10.0)
    rng = random.Random(4321)
    vocab = ["ant", "bee", "cat", "dog", "elk", "fox", "gnu", "hen"]

    for _ in range(500):
        n = rng.randint(1, 3)
        ta = tuple(rng.choice(vocab) for _ in range(rng.randint(0, 12)))
        tb = tuple(rng.choice(vocab) for _ in range(rng.randint(0, 12)))
        grams_a = [ta[i : i + n] for i in range(len(ta) - n + 1)]
        grams_b = [tb[i : i + n] for i in range(len(tb) - n + 1)]
        brute = {ga for ga in grams_a for gb in grams_b if ga == gb}
        assert shared_ngrams(ngrams(ta, n), ngrams(tb, n)).grams == brute

    for _ in range(500):
        count = rng.randint(0, 9)
        responses = [
            (f"r{i}", " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 8))))
            for i in range(count)
        ]
        report = find_duplicates(responses, n=2, threshold=0.7)
        # brute-force single linkage by repeated merging
        from crowdqc.textkit import jaccard

        tokens = {rid: normalize(text) for rid, text in responses}
        grams = {rid: ngrams(tokens[rid], 2) for rid in tokens}
        groups = [{rid} for rid, _ in responses]
        merged = True
        while merged:
            merged = False
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    if any(
                        tokens[a] == tokens[b] or jaccard(grams[a], grams[b]) >= 0.7
                        for a in groups[i]
                        for b in groups[j]
                    ):
                        groups[i] |= groups[j]
                        del groups[j]
                        merged = True
                        break
                if merged:
                    break
        brute_clusters = sorted(tuple(sorted(g)) for g in groups if len(g) > 1)
        assert list(report.clusters) == brute_clusters
    elapsed = done()
    print(f"\n[PASS] criterion 6: shingle and duplicate clustering match brute force on 1000 instances in {elapsed:.2f}s")


def test_criterion_07_pipeline_ordering(fixture_corpus, fixture_lexicon):
    rng = random.Random(2025)
    backend = OfflineSearchBackend(build_index(fixture_corpus))
    lexicon_words = sorted(fixture_lexicon.words)[:400]
    violations = 0
    for i in range(300):
        threshold = rng.choice([0.3, 0.5, 0.8])
        cfg = QCConfig(gibberish_threshold=threshold)
        valid_count = rng.randint(0, 8)
        junk_count = rng.randint(0, 8)
        if valid_count + junk_count == 0:
            junk_count = 1
        words = [rng.choice(lexicon_words) for _ in range(valid_count)]
        words += ["qzx" + str(rng.randint(100, 999)) for _ in range(junk_count)]
        rng.shuffle(words)
        text = " ".join(words)

        tokens = normalize(text)
        validity = lexical_validity(tokens, fixture_lexicon)
        before = backend.fetch_count
        verdict = validate(
            CandidateResponse(worker_id="w", question_id="q", session_id=f"s{i}", text=text),
            cfg,
            backend,
            fixture_lexicon,
        )
        called = backend.fetch_count != before
        if validity < threshold:
            if called or verdict.decision is not Decision.REJECT_GIBBERISH:
                violations += 1
    assert violations == 0
    print("\n[PASS] criterion 7: no search call for any below-threshold response (0/300 violations)")


def _tiny_study() -> StudyConfig:
    return StudyConfig(
        questions=(Question("q1", "A1", "Describe a surprising sound."),),
        qc=QCConfig(),
        quota=10,
    )


def test_criterion_08_service_roundtrip(tmp_path, fixture_corpus, fixture_lexicon):
    done = _timed(5.0)
    log_path = tmp_path / "events.jsonl"
    backend = OfflineSearchBackend(build_index(fixture_corpus))
    app = create_app(_tiny_study(), backend, fixture_lexicon, log_path)
    client = TestClient(app)

    fixed_text = "my kid hums a little tune while waiting for the school bus"
    payload = {
        "worker_id": "w1",
        "question_id": "q1",
        "session_id": "s1",
        "text": "asdkf qwelkj zzxcv",
        "elapsed_seconds": 12.0,
    }
    first = client.post("/v1/validate", json=payload)
    assert first.status_code == 200
    assert first.json()["decision"] == "reject_gibberish"

    payload["text"] = fixed_text
    second = client.post("/v1/validate", json=payload)
    assert second.status_code == 200
    assert second.json()["decision"] == "accept"

    submitted = client.post("/v1/submit", json=payload)
    assert submitted.status_code == 201

    metrics = client.get("/v1/metrics/attempts").json()
    assert metrics["per_question"]["q1"] == 1.0

    snapshot = app.state.study_state.snapshot()
    restarted = create_app(
        _tiny_study(),
        OfflineSearchBackend(build_index(fixture_corpus)),
        fixture_lexicon,
        log_path,
    )
    assert restarted.state.study_state.snapshot() == snapshot
    restarted_client = TestClient(restarted)
    assert restarted_client.get("/v1/metrics/attempts").json() == metrics
    elapsed = done()
    print(f"\n[PASS] criterion 8: service round-trip with replayed restart in {elapsed:.2f}s")


def test_criterion_09_question_quota(tmp_path, fixture_corpus, fixture_lexicon):
    backend = OfflineSearchBackend(build_index(fixture_corpus))
    app = create_app(_tiny_study(), backend, fixture_lexicon, tmp_path / "events.jsonl")
    client = TestClient(app)
    text = "my kid hums a little tune while waiting for the school bus"
    for i in range(10):
        payload = {
            "worker_id": f"w{i}",
            "question_id": "q1",
            "session_id": f"s{i}",
            "text": text,
            "elapsed_seconds": 30.0,
        }
        assert client.post("/v1/validate", json=payload).json()["decision"] == "accept"
        assert client.post("/v1/submit", json=payload).status_code == 201
    eleventh = {
        "worker_id": "w10",
        "question_id": "q1",
        "session_id": "s10",
        "text": text,
        "elapsed_seconds": 30.0,
    }
    assert client.post("/v1/validate", json=eleventh).status_code == 409
    assert client.post("/v1/submit", json=eleventh).status_code == 409
    print("\n[PASS] criterion 9: 11th submission to a quota-10 question is refused with 409")
