"""Detection-robustness harness: run labeled responses through the screen.

Items are labeled Authentic, Copied, or Paraphrased. Each is validated
independently (labels never influence verdicts); the report counts, per
category, how often the tool made the correct call. For Authentic items
the correct call is Accept; for Copied and Paraphrased it is any Reject.
"""
from __future__ import annotations

from dataclasses import dataclass

from .pipeline import CandidateResponse, Decision, QCConfig, ServiceDegraded, validate
from .search import QueryCache, SearchBackend
from .textkit import Lexicon

CATEGORIES = ("Authentic", "Copied", "Paraphrased")


@dataclass(frozen=True)
class LabeledResponse:
    question_id: str
    text: str
    category: str

    def __post_init__(self) -> None:
        if self.category not in CATEGORIES:
            raise ValueError(
                f"category must be one of {CATEGORIES}, got {self.category!r}"
            )


@dataclass(frozen=True)
class ItemOutcome:
    question_id: str
    category: str
    decision: Decision | None
    flagged: bool
    correct: bool
    error: str | None = None


@dataclass(frozen=True)
class CategoryCounts:
    detected: int  # correct calls: Accept for Authentic, Reject otherwise
    undetected: int
    total: int


@dataclass(frozen=True)
class RobustnessReport:
    per_category: dict[str, CategoryCounts]
    items: tuple[ItemOutcome, ...]
    errored: tuple[ItemOutcome, ...]

    def flagged_ids(self, category: str) -> frozenset[str]:
        return frozenset(
            item.question_id
            for item in self.items
            if item.category == category and item.flagged
        )


def run_robustness(
    items: list[LabeledResponse],
    cfg: QCConfig,
    backend: SearchBackend,
    lexicon: Lexicon,
    cache: QueryCache | None = None,
) -> RobustnessReport:
    """Validate every item and aggregate correctness per category.

    Pipeline failures on one item do not abort the run; the item is
    reported separately as errored and excluded from the counts.
    """
    outcomes = []
    errored = []
    for position, item in enumerate(items):
        resp = CandidateResponse(
            worker_id="harness",
            question_id=item.question_id,
            session_id=f"harness-{position}",
            text=item.text,
        )
        try:
            verdict = validate(resp, cfg, backend, lexicon, cache)
        except ServiceDegraded as exc:
            outcome = ItemOutcome(
                question_id=item.question_id,
                category=item.category,
                decision=None,
                flagged=False,
                correct=False,
                error=str(exc),
            )
            errored.append(outcome)
            continue
        flagged = verdict.decision.is_reject()
        correct = not flagged if item.category == "Authentic" else flagged
        outcomes.append(
            ItemOutcome(
                question_id=item.question_id,
                category=item.category,
                decision=verdict.decision,
                flagged=flagged,
                correct=correct,
            )
        )

    per_category = {}
    for category in CATEGORIES:
        scored = [o for o in outcomes if o.category == category]
        detected = sum(1 for o in scored if o.correct)
        per_category[category] = CategoryCounts(
            detected=detected,
            undetected=len(scored) - detected,
            total=len(scored),
        )
    return RobustnessReport(
        per_category=per_category,
        items=tuple(outcomes),
        errored=tuple(errored),
    )


def report_csv_rows(report: RobustnessReport) -> list[list[str]]:
    header = ["outcome", *CATEGORIES]
    detected = ["detected"] + [
        str(report.per_category[c].detected) for c in CATEGORIES
    ]
    undetected = ["undetected"] + [
        str(report.per_category[c].undetected) for c in CATEGORIES
    ]
    total = ["total"] + [str(report.per_category[c].total) for c in CATEGORIES]
    return [header, detected, undetected, total]


def report_text_table(report: RobustnessReport) -> str:
    rows = report_csv_rows(report)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)))
    if report.errored:
        lines.append(f"errored items: {len(report.errored)}")
    return "\n".join(lines) + "\n"
