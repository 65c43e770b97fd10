from __future__ import annotations

import json
from pathlib import Path

import pytest

from crowdqc.search import CorpusDocument, OfflineSearchBackend, build_index
from crowdqc.textkit import Lexicon

FIXTURES = Path(__file__).parent / "fixtures"

# The worked copy-detection pair: response text and its web source.
RESPONSE_TEXT = (
    "A dietary restriction implies restrictions on specific foods that an "
    "individual cannot or will not consume."
)
SOURCE_TEXT = (
    "A dietary restriction means restrictions on certain foods that a "
    "person will not consume."
)
EXPECTED_SHARED = {
    ("a", "dietary", "restriction"),
    ("will", "not", "consume"),
}


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_lexicon() -> Lexicon:
    return Lexicon.from_file(FIXTURES / "lexicon.txt")


@pytest.fixture(scope="session")
def fixture_corpus() -> list[CorpusDocument]:
    docs = []
    with (FIXTURES / "corpus.jsonl").open() as fh:
        for line in fh:
            record = json.loads(line)
            docs.append(CorpusDocument(record["doc_id"], record["body"]))
    return docs


@pytest.fixture()
def fixture_backend(fixture_corpus) -> OfflineSearchBackend:
    return OfflineSearchBackend(build_index(fixture_corpus))


@pytest.fixture(scope="session")
def labeled_items() -> list[dict]:
    items = []
    with (FIXTURES / "robustness_items.jsonl").open() as fh:
        for line in fh:
            items.append(json.loads(line))
    return items
