"""Readers and writers for the on-disk formats the CLI consumes.

All loaders raise SchemaError with the offending path and line number, so
the CLI can report precisely where an input file is malformed.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .postqc.expert import ExpertRecord
from .postqc.ratings import RatingRecord
from .prequal import WorkerProfile
from .robustness import LabeledResponse


class SchemaError(Exception):
    def __init__(self, path: Path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


@dataclass(frozen=True)
class CollectedResponse:
    """One collected answer as stored for post-hoc analysis."""

    response_id: str
    text: str
    elapsed_seconds: float = 0.0
    worker_id: str | None = None
    question_id: str | None = None


def _iter_jsonl(path: Path):
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(path, lineno, f"invalid JSON: {exc}") from exc


def load_collected_responses(path: str | Path) -> list[CollectedResponse]:
    path = Path(path)
    responses = []
    for lineno, record in _iter_jsonl(path):
        try:
            responses.append(
                CollectedResponse(
                    response_id=record["response_id"],
                    text=record["text"],
                    elapsed_seconds=float(record.get("elapsed_seconds", 0.0)),
                    worker_id=record.get("worker_id"),
                    question_id=record.get("question_id"),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(path, lineno, f"bad response record: {exc}") from exc
    return responses


def load_labeled_responses(path: str | Path) -> list[LabeledResponse]:
    path = Path(path)
    items = []
    for lineno, record in _iter_jsonl(path):
        try:
            items.append(
                LabeledResponse(
                    question_id=record["question_id"],
                    text=record["text"],
                    category=record["category"],
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(path, lineno, f"bad labeled response: {exc}") from exc
    return items


def load_roster(path: str | Path) -> list[WorkerProfile]:
    path = Path(path)
    workers = []
    known = {
        "worker_id",
        "country",
        "approval_rate",
        "has_platform_masters",
        "sex",
        "race",
        "ethnicity",
        "education",
        "age",
        "profession",
        "qual_answers",
    }
    for lineno, record in _iter_jsonl(path):
        try:
            unknown = set(record) - known
            if unknown:
                raise ValueError(f"unknown fields {sorted(unknown)}")
            workers.append(WorkerProfile(**record))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(path, lineno, f"bad worker profile: {exc}") from exc
    return workers


def load_ratings_csv(path: str | Path) -> dict[str, list[RatingRecord]]:
    """Read evaluator ratings, grouped by evaluator id in file order."""
    path = Path(path)
    by_evaluator: dict[str, list[RatingRecord]] = {}
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or set(reader.fieldnames) != {
            "response_id",
            "evaluator_id",
            "overall_good",
        }:
            raise SchemaError(
                path, 1, "header must be response_id,evaluator_id,overall_good"
            )
        for lineno, row in enumerate(reader, start=2):
            try:
                record = RatingRecord(
                    response_id=row["response_id"],
                    evaluator_id=row["evaluator_id"],
                    overall_good=int(row["overall_good"]),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(path, lineno, f"bad rating row: {exc}") from exc
            by_evaluator.setdefault(record.evaluator_id, []).append(record)
    return by_evaluator


def _parse_likert(value: str, lineno: int, path: Path, column: str) -> int | None:
    value = value.strip()
    if value in ("", "NA", "na"):
        return None
    try:
        return int(value)
    except ValueError as exc:
        raise SchemaError(path, lineno, f"{column} must be an integer or NA") from exc


def load_expert_csv(path: str | Path) -> list[ExpertRecord]:
    path = Path(path)
    expected = {
        "response_id",
        "criterion",
        "intelligible",
        "exact_match",
        "typical",
        "normal",
        "not_typical",
        "ehr_match",
    }
    records = []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or set(reader.fieldnames) != expected:
            raise SchemaError(path, 1, f"header must have columns {sorted(expected)}")
        for lineno, row in enumerate(reader, start=2):
            try:
                records.append(
                    ExpertRecord(
                        response_id=row["response_id"],
                        criterion=row["criterion"],
                        intelligible=row["intelligible"].strip() == "1",
                        exact_match=row["exact_match"].strip() == "1",
                        typical=_parse_likert(row["typical"], lineno, path, "typical"),
                        normal=_parse_likert(row["normal"], lineno, path, "normal"),
                        not_typical=_parse_likert(
                            row["not_typical"], lineno, path, "not_typical"
                        ),
                        ehr_match=_parse_likert(
                            row["ehr_match"], lineno, path, "ehr_match"
                        ),
                    )
                )
            except (KeyError, ValueError) as exc:
                if isinstance(exc, SchemaError):
                    raise
                raise SchemaError(path, lineno, f"bad expert row: {exc}") from exc
    return records


def write_csv(path: str | Path, rows: list[list]) -> None:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(rows)
