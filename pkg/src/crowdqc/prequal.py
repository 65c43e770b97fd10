"""Worker gating, qualification tagging, and cohort demographics.

Gating enforces the platform-level entry bar (US residency, 98% approval).
Qualification tags are derived from the worker's own qualification-task
profile and are not mutually exclusive. Demographic summaries mirror the
usual "percent (count)" table layout.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from pathlib import Path

MIN_APPROVAL_RATE = 98.0
REQUIRED_COUNTRY = "US"

SEX_CHOICES = ("Female", "Male")
RACE_CHOICES = (
    "American Indian or Alaska Native",
    "Asian",
    "Black or African-American",
    "White",
)
ETHNICITY_CHOICES = ("Hispanic or Latino", "Not Hispanic or Latino")
EDUCATION_CHOICES = (
    "Less than high school degree",
    "High school diploma",
    "Associate degree",
    "Bachelor's degree",
    "Master's degree",
    "Doctoral degree",
)
CATEGORICAL_VARIABLES = {
    "sex": SEX_CHOICES,
    "race": RACE_CHOICES,
    "ethnicity": ETHNICITY_CHOICES,
    "education": EDUCATION_CHOICES,
}
GRADUATE_DEGREES = ("Master's degree", "Doctoral degree")


class IncompleteProfile(Exception):
    pass


class EmptyCohort(Exception):
    pass


class QualificationTag(str, Enum):
    MM = "MM"  # platform masters
    HC = "HC"  # healthcare professional
    GD = "GD"  # graduate degree
    ED = "ED"  # education professional


def canonical_education(value: str) -> str:
    """Fold display suffixes, e.g. "Doctoral degree (PhD, MD,...)"."""
    for choice in EDUCATION_CHOICES:
        if value == choice or value.startswith(choice + " ("):
            return choice
    raise ValueError(f"unknown education category {value!r}")


@dataclass(frozen=True)
class WorkerProfile:
    worker_id: str
    country: str | None = None
    approval_rate: float | None = None
    has_platform_masters: bool = False
    sex: str | None = None
    race: str | None = None
    ethnicity: str | None = None
    education: str | None = None
    age: int | None = None
    profession: str | None = None
    qual_answers: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.worker_id:
            raise ValueError("worker_id must be non-empty")
        if self.approval_rate is not None and not 0.0 <= self.approval_rate <= 100.0:
            raise ValueError("approval_rate must be in [0, 100]")
        if self.age is not None and self.age <= 0:
            raise ValueError("age must be positive when present")
        if self.sex is not None and self.sex not in SEX_CHOICES:
            raise ValueError(f"unknown sex category {self.sex!r}")
        if self.race is not None and self.race not in RACE_CHOICES:
            raise ValueError(f"unknown race category {self.race!r}")
        if self.ethnicity is not None and self.ethnicity not in ETHNICITY_CHOICES:
            raise ValueError(f"unknown ethnicity category {self.ethnicity!r}")
        if self.education is not None:
            object.__setattr__(self, "education", canonical_education(self.education))


@dataclass(frozen=True)
class GateResult:
    accepted: bool
    failed: tuple[str, ...]
    reasons: tuple[str, ...]


def gate(worker: WorkerProfile) -> GateResult:
    """Accept iff the worker is US-based with approval rate >= 98.0.

    The boundary is inclusive: exactly 98.0 passes. Every failed
    criterion is reported, not just the first.
    """
    if worker.country is None or worker.approval_rate is None:
        missing = [f for f in ("country", "approval_rate") if getattr(worker, f) is None]
        raise IncompleteProfile(
            f"worker {worker.worker_id!r} is missing: {', '.join(missing)}"
        )
    failed = []
    reasons = []
    if worker.country != REQUIRED_COUNTRY:
        failed.append("country")
        reasons.append(f"country must be {REQUIRED_COUNTRY} (got {worker.country!r})")
    if worker.approval_rate < MIN_APPROVAL_RATE:
        failed.append("approval_rate")
        reasons.append(
            f"approval rate must be at least {MIN_APPROVAL_RATE} (got {worker.approval_rate})"
        )
    return GateResult(accepted=not failed, failed=tuple(failed), reasons=tuple(reasons))


def assign_qualifications(worker: WorkerProfile) -> frozenset[QualificationTag]:
    """Derive qualification tags from profile fields. Tags may combine.

    Callers should gate the worker first; tagging itself looks only at
    platform-masters status, profession, and education.
    """
    tags = set()
    if worker.has_platform_masters:
        tags.add(QualificationTag.MM)
    profession = (worker.profession or "").strip().lower()
    if profession == "healthcare":
        tags.add(QualificationTag.HC)
    if profession == "education":
        tags.add(QualificationTag.ED)
    if worker.education in GRADUATE_DEGREES:
        tags.add(QualificationTag.GD)
    return frozenset(tags)


def round_percent(count: int, n: int) -> Decimal:
    """Percent of cohort, rounded in two stages: hundredths, then tenths.

    The two-stage rounding reproduces how published demographic tables
    are typically produced (values formatted at two decimals, then
    re-rounded to one for print); a single half-up pass disagrees with
    such tables on .x45..x49 fractions.
    """
    pct = (Decimal(count) * 100) / Decimal(n)
    return pct.quantize(Decimal("0.01"), ROUND_HALF_UP).quantize(
        Decimal("0.1"), ROUND_HALF_UP
    )


@dataclass(frozen=True)
class DemographicsSummary:
    n: int
    variables: dict[str, tuple[tuple[str, Decimal, int], ...]]
    age_mean: float
    age_sd: float
    age_min: int
    age_max: int

    def cell(self, variable: str, choice: str) -> str:
        """Format one table cell as "percent (count)"."""
        for name, pct, count in self.variables[variable]:
            if name == choice:
                return f"{pct} ({count})"
        raise KeyError(f"{choice!r} not a choice of {variable!r}")


def summarize_demographics(cohort: list[WorkerProfile]) -> DemographicsSummary:
    """Per-choice percent/count plus age mean, population SD, and range.

    Percentages are always taken over the cohort size; a worker who
    skipped a question simply counts toward no choice of that variable
    (so a variable's counts can sum to less than n).
    """
    if not cohort:
        raise EmptyCohort("cannot summarize an empty cohort")
    n = len(cohort)
    variables: dict[str, tuple[tuple[str, Decimal, int], ...]] = {}
    for variable, choices in CATEGORICAL_VARIABLES.items():
        counts = {choice: 0 for choice in choices}
        for worker in cohort:
            value = getattr(worker, variable)
            if value is not None:
                counts[value] += 1
        variables[variable] = tuple(
            (choice, round_percent(counts[choice], n), counts[choice])
            for choice in choices
        )
    ages = [worker.age for worker in cohort if worker.age is not None]
    if not ages:
        raise IncompleteProfile("no worker in the cohort reported an age")
    mean = sum(ages) / len(ages)
    sd = math.sqrt(sum((a - mean) ** 2 for a in ages) / len(ages))
    return DemographicsSummary(
        n=n,
        variables=variables,
        age_mean=mean,
        age_sd=sd,
        age_min=min(ages),
        age_max=max(ages),
    )


def write_demographics_csv(summary: DemographicsSummary, path: str | Path) -> None:
    """Export the summary as a flat CSV, one cell per row."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["variable", "choice", "percent", "count"])
        for variable, rows in summary.variables.items():
            for choice, pct, count in rows:
                writer.writerow([variable, choice, str(pct), count])
        writer.writerow(["age", "mean", f"{summary.age_mean:.1f}", summary.n])
        writer.writerow(["age", "sd", f"{summary.age_sd:.1f}", summary.n])
        writer.writerow(
            ["age", "range", f"{summary.age_min}-{summary.age_max}", summary.n]
        )
