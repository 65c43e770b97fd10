"""Text normalization, word-shingle (n-gram) sets, and lexicon validity scoring.

Everything here is a pure function over immutable values, so it is safe to
call from any thread. Matching is deliberately literal: lowercase surface
forms, no stemming, no stop-word removal. Two texts share an n-gram only if
the same n consecutive words appear in both.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

Tokens = tuple[str, ...]
Gram = tuple[str, ...]


def normalize(text: str) -> Tokens:
    """Case-fold, strip Unicode punctuation/symbols, split on whitespace.

    Idempotent: normalizing the space-joined token sequence returns the
    same tokens. Empty input (or all-punctuation input) yields ().
    casefold rather than lower so that e.g. "ß" and "SS" match.
    """
    cleaned = []
    for ch in text.casefold():
        cat = unicodedata.category(ch)
        if cat[0] in ("P", "S"):
            continue
        cleaned.append(ch)
    return tuple("".join(cleaned).split())


@dataclass(frozen=True)
class NGramSet:
    """Deduplicated set of n-token windows taken from one text."""

    n: int
    grams: frozenset[Gram] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.grams)

    def __contains__(self, gram: Gram) -> bool:
        return gram in self.grams

    def __bool__(self) -> bool:
        return bool(self.grams)


def ngrams(tokens: Tokens, n: int) -> NGramSet:
    """All contiguous n-token windows of `tokens`, as a set.

    Texts shorter than n tokens produce the empty set: they carry no
    shingle evidence at width n.
    """
    if n < 1:
        raise ValueError(f"shingle width must be >= 1, got {n}")
    windows = (tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))
    return NGramSet(n=n, grams=frozenset(windows))


def _require_same_width(a: NGramSet, b: NGramSet) -> None:
    if a.n != b.n:
        raise ValueError(f"mismatched shingle widths: {a.n} != {b.n}")


def shared_ngrams(a: NGramSet, b: NGramSet) -> NGramSet:
    """Set intersection of two shingle sets of equal width."""
    _require_same_width(a, b)
    return NGramSet(n=a.n, grams=a.grams & b.grams)


def jaccard(a: NGramSet, b: NGramSet) -> float:
    """|a ∩ b| / |a ∪ b|, defined as 0.0 when both sets are empty."""
    _require_same_width(a, b)
    union = a.grams | b.grams
    if not union:
        return 0.0
    return len(a.grams & b.grams) / len(union)


@dataclass(frozen=True)
class Lexicon:
    """Set of known-valid words, loaded from a word-list file.

    Stands in for a spellchecker: a token is "valid" iff it appears in
    the list. Read-only after construction.
    """

    words: frozenset[str]
    source: str = "<memory>"

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError(f"lexicon {self.source!r} is empty")

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words, source: str = "<memory>") -> "Lexicon":
        normalized = set()
        for word in words:
            normalized.update(normalize(word))
        return cls(words=frozenset(normalized), source=source)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        """Load a word list: one word per line, UTF-8, '#' starts a comment."""
        path = Path(path)
        words = []
        with path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                words.append(line)
        return cls.from_words(words, source=str(path))


def default_lexicon() -> Lexicon:
    """The word list shipped with the package (common English words)."""
    return Lexicon.from_file(Path(__file__).parent / "data" / "wordlist.txt")


def lexical_validity(tokens: Tokens, lexicon: Lexicon) -> float:
    """Fraction of tokens found in the lexicon; 0.0 for an empty sequence."""
    if not tokens:
        return 0.0
    hits = sum(1 for tok in tokens if tok in lexicon)
    return hits / len(tokens)
