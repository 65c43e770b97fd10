"""Expert Likert-rating aggregation into a per-criterion summary table."""
from __future__ import annotations

from dataclasses import dataclass

CRITERIA = ("A1", "A2", "A3", "B1", "B2", "B3", "B4")
LIKERT_COLUMNS = ("typical", "normal", "not_typical", "ehr_match")


@dataclass(frozen=True)
class ExpertRecord:
    """One expert judgment of one response.

    An unintelligible response carries no Likert ratings at all; an
    intelligible one is rated 1-5 on each scale (a missing cell means the
    expert skipped that scale). Exact-match can only be claimed for an
    intelligible response.
    """

    response_id: str
    criterion: str
    intelligible: bool
    exact_match: bool
    typical: int | None = None
    normal: int | None = None
    not_typical: int | None = None
    ehr_match: int | None = None

    def __post_init__(self) -> None:
        if self.criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {self.criterion!r}")
        if self.exact_match and not self.intelligible:
            raise ValueError(
                f"record {self.response_id!r}: exact match implies intelligible"
            )
        for column in LIKERT_COLUMNS:
            value = getattr(self, column)
            if value is None:
                continue
            if not self.intelligible:
                raise ValueError(
                    f"record {self.response_id!r}: unintelligible responses "
                    f"carry no Likert ratings"
                )
            if value not in (1, 2, 3, 4, 5):
                raise ValueError(
                    f"record {self.response_id!r}: {column} must be 1-5, got {value!r}"
                )


@dataclass(frozen=True)
class CriterionRow:
    criterion: str
    count: int
    unintelligible: int
    intelligible: int
    exact_match: int
    means: dict[str, float | None]  # per Likert column, None when unrated


@dataclass(frozen=True)
class ExpertSummary:
    rows: tuple[CriterionRow, ...]
    total_count: int
    total_unintelligible: int
    total_intelligible: int
    total_exact_match: int
    averages: dict[str, float | None]  # mean of the per-criterion means


def aggregate_expert(records: list[ExpertRecord]) -> ExpertSummary:
    """Summarize expert records per criterion, plus totals and averages.

    Likert means are taken over the intelligible records that rated each
    scale. The bottom "average" line is the mean of the per-criterion
    means, not a pooled mean over all records.
    """
    by_criterion: dict[str, list[ExpertRecord]] = {c: [] for c in CRITERIA}
    for record in records:
        by_criterion[record.criterion].append(record)

    rows = []
    for criterion in CRITERIA:
        group = by_criterion[criterion]
        if not group:
            continue
        means: dict[str, float | None] = {}
        for column in LIKERT_COLUMNS:
            values = [
                getattr(r, column)
                for r in group
                if r.intelligible and getattr(r, column) is not None
            ]
            means[column] = sum(values) / len(values) if values else None
        rows.append(
            CriterionRow(
                criterion=criterion,
                count=len(group),
                unintelligible=sum(1 for r in group if not r.intelligible),
                intelligible=sum(1 for r in group if r.intelligible),
                exact_match=sum(1 for r in group if r.exact_match),
                means=means,
            )
        )

    averages: dict[str, float | None] = {}
    for column in LIKERT_COLUMNS:
        column_means = [row.means[column] for row in rows if row.means[column] is not None]
        averages[column] = (
            sum(column_means) / len(column_means) if column_means else None
        )
    return ExpertSummary(
        rows=tuple(rows),
        total_count=sum(row.count for row in rows),
        total_unintelligible=sum(row.unintelligible for row in rows),
        total_intelligible=sum(row.intelligible for row in rows),
        total_exact_match=sum(row.exact_match for row in rows),
        averages=averages,
    )


def _fmt_mean(value: float | None) -> str:
    return "NA" if value is None else f"{value:.2f}"


def summary_csv_rows(summary: ExpertSummary) -> list[list[str]]:
    rows: list[list[str]] = [
        [
            "criterion",
            "count",
            "unintelligible",
            "intelligible",
            "exact_match",
            *LIKERT_COLUMNS,
        ]
    ]
    for row in summary.rows:
        rows.append(
            [
                row.criterion,
                str(row.count),
                str(row.unintelligible),
                str(row.intelligible),
                str(row.exact_match),
                *[_fmt_mean(row.means[c]) for c in LIKERT_COLUMNS],
            ]
        )
    rows.append(
        [
            "total",
            str(summary.total_count),
            str(summary.total_unintelligible),
            str(summary.total_intelligible),
            str(summary.total_exact_match),
            "NA",
            "NA",
            "NA",
            "NA",
        ]
    )
    rows.append(
        [
            "average",
            "NA",
            "NA",
            "NA",
            "NA",
            *[_fmt_mean(summary.averages[c]) for c in LIKERT_COLUMNS],
        ]
    )
    return rows


def summary_text_table(summary: ExpertSummary) -> str:
    rows = summary_csv_rows(summary)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in rows
    ]
    return "\n".join(lines) + "\n"
