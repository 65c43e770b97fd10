"""Small input-validation helpers shared by the estimator-style API."""
from __future__ import annotations

from typing import Sequence


def ensure_text_sequence(X, name: str = "X") -> list[str]:
    """Accept a sequence of strings, rejecting anything else early."""
    if isinstance(X, str):
        raise TypeError(f"{name} must be a sequence of texts, not a single string")
    try:
        items = list(X)
    except TypeError as exc:
        raise TypeError(f"{name} must be an iterable of texts") from exc
    for i, item in enumerate(items):
        if not isinstance(item, str):
            raise TypeError(f"{name}[{i}] is {type(item).__name__}, expected str")
    return items


def ensure_binary_sequence(values: Sequence, name: str = "y") -> list[int]:
    out = []
    for i, value in enumerate(values):
        if value not in (0, 1):
            raise ValueError(f"{name}[{i}] must be 0 or 1, got {value!r}")
        out.append(int(value))
    return out
