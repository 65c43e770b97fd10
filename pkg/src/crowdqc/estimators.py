"""Estimator-style wrappers so the screen composes with sklearn tooling.

CopyScreen is classifier-shaped: fit on the reference corpus, predict a
decision label per text. DuplicateClusterer is clustering-shaped: fit on
a list of texts, read cluster labels. Both follow the sklearn parameter
conventions (constructor stores params verbatim, fitted state carries a
trailing underscore, get_params/set_params work).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .pipeline import CandidateResponse, QCConfig, Verdict, validate
from .postqc.screening import find_duplicates
from .search import CorpusDocument, OfflineSearchBackend, QueryCache, SearchConfig, build_index
from .textkit import Lexicon, default_lexicon
from .validation import ensure_text_sequence


def _as_documents(X) -> list[CorpusDocument]:
    docs = []
    for i, item in enumerate(X):
        if isinstance(item, CorpusDocument):
            docs.append(item)
        elif isinstance(item, str):
            docs.append(CorpusDocument(doc_id=f"doc-{i:05d}", body=item))
        else:
            try:
                doc_id, body = item
            except (TypeError, ValueError) as exc:
                raise TypeError(
                    "corpus items must be CorpusDocument, str, or (doc_id, body)"
                ) from exc
            docs.append(CorpusDocument(doc_id=str(doc_id), body=body))
    return docs


class CopyScreen(BaseEstimator):
    """Screen texts against a reference corpus for copy/gibberish rejection.

    fit(X) indexes the reference corpus; predict(X) returns one of
    "accept", "reject_gibberish", "reject_copied" per input text.
    """

    def __init__(
        self,
        n: int = 3,
        gibberish_threshold: float = 0.5,
        min_shared_grams: int = 1,
        top_k: int = 5,
        max_query_tokens: int = 32,
        empty_result_policy: str = "accept",
        search_check_enabled: bool = True,
        lexicon: str | Lexicon | None = None,
    ):
        self.n = n
        self.gibberish_threshold = gibberish_threshold
        self.min_shared_grams = min_shared_grams
        self.top_k = top_k
        self.max_query_tokens = max_query_tokens
        self.empty_result_policy = empty_result_policy
        self.search_check_enabled = search_check_enabled
        self.lexicon = lexicon

    def fit(self, X, y=None):
        """Index the reference corpus (texts, pairs, or CorpusDocuments)."""
        docs = _as_documents(X)
        self.index_ = build_index(docs)
        self.backend_ = OfflineSearchBackend(self.index_)
        if self.lexicon is None:
            self.lexicon_ = default_lexicon()
        elif isinstance(self.lexicon, Lexicon):
            self.lexicon_ = self.lexicon
        else:
            self.lexicon_ = Lexicon.from_file(self.lexicon)
        self.config_ = QCConfig(
            n=self.n,
            gibberish_threshold=self.gibberish_threshold,
            min_shared_grams=self.min_shared_grams,
            empty_result_policy=self.empty_result_policy,
            search_check_enabled=self.search_check_enabled,
            search=SearchConfig(
                max_query_tokens=self.max_query_tokens, top_k=self.top_k
            ),
        )
        self.cache_ = QueryCache()
        return self

    def validate_text(self, text: str, question_id: str = "q") -> Verdict:
        """Full verdict (decision, evidence, validity) for one text."""
        check_is_fitted(self, "config_")
        resp = CandidateResponse(
            worker_id="estimator", question_id=question_id, session_id="estimator", text=text
        )
        return validate(resp, self.config_, self.backend_, self.lexicon_, self.cache_)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "config_")
        texts = ensure_text_sequence(X)
        return np.array(
            [self.validate_text(text).decision.value for text in texts], dtype=object
        )


class DuplicateClusterer(BaseEstimator):
    """Cluster near-duplicate texts by shingle Jaccard (single linkage).

    After fit, labels_ holds one integer per input: duplicates share a
    non-negative cluster id, unduplicated texts get -1.
    """

    def __init__(self, n: int = 3, threshold: float = 0.8):
        self.n = n
        self.threshold = threshold

    def fit(self, X, y=None):
        texts = ensure_text_sequence(X)
        pairs = [(str(i), text) for i, text in enumerate(texts)]
        self.report_ = find_duplicates(pairs, n=self.n, threshold=self.threshold)
        labels = np.full(len(texts), -1, dtype=int)
        for cluster_id, members in enumerate(self.report_.clusters):
            for member in members:
                labels[int(member)] = cluster_id
        self.labels_ = labels
        return self

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X).labels_
