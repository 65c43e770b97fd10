"""Dual-evaluator binary ratings: merging and chance-corrected agreement."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence


class AlignmentError(Exception):
    """The two evaluators did not rate the same response set."""


class DegenerateMarginals(Exception):
    """Chance agreement is exactly 1, so kappa is undefined."""


@dataclass(frozen=True)
class RatingRecord:
    response_id: str
    evaluator_id: str
    overall_good: int

    def __post_init__(self) -> None:
        if self.overall_good not in (0, 1):
            raise ValueError(
                f"rating for {self.response_id!r} must be 0 or 1, "
                f"got {self.overall_good!r}"
            )


@dataclass(frozen=True)
class MergedRatings:
    per_response: dict[str, float]  # mean of the two ratings: 0, 0.5 or 1
    good_pct: float
    bad_pct: float


def merge_ratings(r1: list[RatingRecord], r2: list[RatingRecord]) -> MergedRatings:
    """Average the two evaluators per response and report cohort percentages.

    Good% is 100 times the mean of the per-response means; Bad% is its
    exact complement.
    """
    by_id1 = {r.response_id: r.overall_good for r in r1}
    by_id2 = {r.response_id: r.overall_good for r in r2}
    if len(by_id1) != len(r1) or len(by_id2) != len(r2):
        raise AlignmentError("an evaluator rated some response more than once")
    if by_id1.keys() != by_id2.keys():
        only_1 = sorted(by_id1.keys() - by_id2.keys())
        only_2 = sorted(by_id2.keys() - by_id1.keys())
        raise AlignmentError(
            f"response sets differ; only evaluator 1 rated {only_1}, "
            f"only evaluator 2 rated {only_2}"
        )
    if not by_id1:
        raise AlignmentError("no ratings to merge")
    per_response = {
        rid: (by_id1[rid] + by_id2[rid]) / 2 for rid in sorted(by_id1)
    }
    good_pct = 100.0 * sum(per_response.values()) / len(per_response)
    return MergedRatings(
        per_response=per_response, good_pct=good_pct, bad_pct=100.0 - good_pct
    )


@dataclass(frozen=True)
class KappaResult:
    kappa: float
    p_o: float
    p_e: float


def cohens_kappa(r1: Sequence[int], r2: Sequence[int]) -> KappaResult:
    """Cohen's kappa for two aligned binary rating vectors.

    kappa = (p_o - p_e) / (1 - p_e) with p_o the observed agreement rate
    and p_e the chance agreement from the raters' marginals. Perfect
    observed agreement returns kappa 1.0 outright; p_e == 1 with
    imperfect agreement has no defined kappa and raises.
    """
    if len(r1) != len(r2):
        raise ValueError(f"rating lists differ in length: {len(r1)} != {len(r2)}")
    if not r1:
        raise ValueError("rating lists must be non-empty")
    for value in (*r1, *r2):
        if value not in (0, 1):
            raise ValueError(f"ratings must be binary, got {value!r}")

    n = len(r1)
    p_o = sum(1 for a, b in zip(r1, r2) if a == b) / n
    marginals1 = Counter(r1)
    marginals2 = Counter(r2)
    p_e = sum(marginals1[c] / n * marginals2[c] / n for c in (0, 1))
    if p_o == 1.0:
        return KappaResult(kappa=1.0, p_o=p_o, p_e=p_e)
    if p_e == 1.0:
        raise DegenerateMarginals(
            "both raters used a single category; kappa is undefined"
        )
    return KappaResult(kappa=(p_o - p_e) / (1.0 - p_e), p_o=p_o, p_e=p_e)
