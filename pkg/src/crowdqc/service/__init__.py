"""HTTP service: app factory, study config, event-log persistence."""
from .app import create_app
from .config import (
    BackendSpec,
    ConfigError,
    Question,
    Rewards,
    StudyConfig,
    build_backend,
    build_cache,
    load_lexicon,
    load_study_config,
)
from .store import EventLog, StoredSubmission, StudyState

__all__ = [
    "BackendSpec",
    "ConfigError",
    "EventLog",
    "Question",
    "Rewards",
    "StoredSubmission",
    "StudyConfig",
    "StudyState",
    "build_backend",
    "build_cache",
    "create_app",
    "load_lexicon",
    "load_study_config",
]
