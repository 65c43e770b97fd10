"""Post-collection analysis: duplicates, agreement, ANOVA, expert tables."""
from .expert import (
    CRITERIA,
    LIKERT_COLUMNS,
    CriterionRow,
    ExpertRecord,
    ExpertSummary,
    aggregate_expert,
)
from .ratings import (
    AlignmentError,
    DegenerateMarginals,
    KappaResult,
    MergedRatings,
    RatingRecord,
    cohens_kappa,
    merge_ratings,
)
from .screening import (
    DuplicateReport,
    completion_time_filter,
    find_duplicates,
    flag_fast_sessions,
)
from .stats import (
    AnovaResult,
    InvalidDesign,
    anova_oneway,
    f_distribution_tail,
    regularized_incomplete_beta,
)

__all__ = [
    "CRITERIA",
    "LIKERT_COLUMNS",
    "AlignmentError",
    "AnovaResult",
    "CriterionRow",
    "DegenerateMarginals",
    "DuplicateReport",
    "ExpertRecord",
    "ExpertSummary",
    "InvalidDesign",
    "KappaResult",
    "MergedRatings",
    "RatingRecord",
    "aggregate_expert",
    "anova_oneway",
    "cohens_kappa",
    "completion_time_filter",
    "f_distribution_tail",
    "find_duplicates",
    "flag_fast_sessions",
    "merge_ratings",
    "regularized_incomplete_beta",
]
