from __future__ import annotations

import pytest

from crowdqc.io import (
    SchemaError,
    load_collected_responses,
    load_expert_csv,
    load_labeled_responses,
    load_ratings_csv,
    load_roster,
)


class TestJsonlLoaders:
    def test_collected_responses(self, fixtures_dir):
        responses = load_collected_responses(fixtures_dir / "responses.jsonl")
        assert len(responses) == 10
        assert responses[0].response_id == "resp-01"
        assert responses[5].elapsed_seconds == 4.0

    def test_labeled_items(self, fixtures_dir):
        items = load_labeled_responses(fixtures_dir / "robustness_items.jsonl")
        assert len(items) == 87
        categories = {i.category for i in items}
        assert categories == {"Authentic", "Copied", "Paraphrased"}

    def test_roster(self, fixtures_dir):
        roster = load_roster(fixtures_dir / "roster.jsonl")
        assert len(roster) == 26
        assert all(w.country == "US" for w in roster)

    def test_bad_json_line_number(self, tmp_path):
        path = tmp_path / "items.jsonl"
        path.write_text(
            '{"question_id": "q", "text": "t", "category": "Copied"}\n{oops\n'
        )
        with pytest.raises(SchemaError) as err:
            load_labeled_responses(path)
        assert err.value.lineno == 2

    def test_bad_category_line_number(self, tmp_path):
        path = tmp_path / "items.jsonl"
        path.write_text('{"question_id": "q", "text": "t", "category": "Nope"}\n')
        with pytest.raises(SchemaError) as err:
            load_labeled_responses(path)
        assert err.value.lineno == 1

    def test_unknown_roster_field(self, tmp_path):
        path = tmp_path / "roster.jsonl"
        path.write_text('{"worker_id": "w1", "shoe_size": 44}\n')
        with pytest.raises(SchemaError, match="shoe_size"):
            load_roster(path)


class TestCsvLoaders:
    def test_ratings_grouped_by_evaluator(self, fixtures_dir):
        by_evaluator = load_ratings_csv(fixtures_dir / "ratings.csv")
        assert set(by_evaluator) == {"e1", "e2"}
        assert len(by_evaluator["e1"]) == 290

    def test_ratings_header_checked(self, tmp_path):
        path = tmp_path / "ratings.csv"
        path.write_text("id,rater,good\n1,a,1\n")
        with pytest.raises(SchemaError, match="header"):
            load_ratings_csv(path)

    def test_ratings_bad_value_line_number(self, tmp_path):
        path = tmp_path / "ratings.csv"
        path.write_text(
            "response_id,evaluator_id,overall_good\nr1,e1,1\nr2,e1,maybe\n"
        )
        with pytest.raises(SchemaError) as err:
            load_ratings_csv(path)
        assert err.value.lineno == 3

    def test_expert_records(self, fixtures_dir):
        records = load_expert_csv(fixtures_dir / "expert_ratings.csv")
        assert len(records) == 175
        unintelligible = [r for r in records if not r.intelligible]
        assert len(unintelligible) == 79
        assert all(r.typical is None for r in unintelligible)

    def test_expert_bad_likert(self, tmp_path):
        path = tmp_path / "expert.csv"
        path.write_text(
            "response_id,criterion,intelligible,exact_match,typical,normal,not_typical,ehr_match\n"
            "r1,A1,1,0,seven,1,1,1\n"
        )
        with pytest.raises(SchemaError, match="typical"):
            load_expert_csv(path)
