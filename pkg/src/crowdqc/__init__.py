"""crowdqc: quality control for crowdsourced free-text collection.

Real-time screening (gibberish gate + search-backed copy detection),
worker gating and qualification tagging, post-collection analysis
(duplicates, rater agreement, ANOVA, expert tables), and a detection
robustness harness — plus an HTTP service and CLI that tie them together.
"""
from .estimators import CopyScreen, DuplicateClusterer
from .pipeline import (
    ACCEPT_MESSAGE,
    AttemptLog,
    AttemptTracker,
    CandidateResponse,
    Decision,
    QCConfig,
    ServiceDegraded,
    SessionClosed,
    Verdict,
    record_attempt,
    validate,
)
from .robustness import LabeledResponse, RobustnessReport, run_robustness
from .textkit import (
    Lexicon,
    NGramSet,
    default_lexicon,
    jaccard,
    lexical_validity,
    ngrams,
    normalize,
    shared_ngrams,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPT_MESSAGE",
    "AttemptLog",
    "AttemptTracker",
    "CandidateResponse",
    "CopyScreen",
    "Decision",
    "DuplicateClusterer",
    "LabeledResponse",
    "Lexicon",
    "NGramSet",
    "QCConfig",
    "RobustnessReport",
    "ServiceDegraded",
    "SessionClosed",
    "Verdict",
    "default_lexicon",
    "jaccard",
    "lexical_validity",
    "ngrams",
    "normalize",
    "record_attempt",
    "run_robustness",
    "shared_ngrams",
    "validate",
]
