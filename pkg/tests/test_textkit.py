from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from crowdqc.textkit import (
    Lexicon,
    NGramSet,
    jaccard,
    lexical_validity,
    ngrams,
    normalize,
    shared_ngrams,
)

from conftest import EXPECTED_SHARED, RESPONSE_TEXT, SOURCE_TEXT

words = st.text(alphabet="abcdefg", min_size=1, max_size=4)
token_lists = st.lists(words, max_size=12)


class TestNormalize:
    def test_case_folds_and_strips_punctuation(self):
        assert normalize("A Dietary restriction!") == ("a", "dietary", "restriction")

    def test_empty_string(self):
        assert normalize("") == ()

    def test_whitespace_collapse(self):
        assert normalize("will not   consume.") == ("will", "not", "consume")

    def test_unicode_punctuation_and_symbols(self):
        assert normalize("“Smart—quotes” cost $5 • or €3…") == (
            "smartquotes",
            "cost",
            "5",
            "or",
            "3",
        )

    def test_apostrophes_collapse_into_token(self):
        assert normalize("he doesn't") == ("he", "doesnt")

    @given(st.text(max_size=60))
    def test_idempotent(self, text):
        tokens = normalize(text)
        assert normalize(" ".join(tokens)) == tokens

    @given(st.text(max_size=60))
    def test_case_insensitive(self, text):
        assert normalize(text) == normalize(text.upper())

    @given(st.text(max_size=60))
    def test_tokens_clean(self, text):
        for token in normalize(text):
            assert token
            assert not any(ch.isspace() for ch in token)


class TestNgrams:
    def test_sliding_window(self):
        result = ngrams(("a", "b", "c", "d"), 3)
        assert result.grams == {("a", "b", "c"), ("b", "c", "d")}
        assert result.n == 3

    def test_shorter_than_n(self):
        assert ngrams(("a", "b"), 3).grams == frozenset()

    def test_width_one_is_distinct_tokens(self):
        assert ngrams(("x", "y", "x"), 1).grams == {("x",), ("y",)}

    def test_zero_width_rejected(self):
        with pytest.raises(ValueError):
            ngrams(("a",), 0)

    @given(token_lists, st.integers(min_value=1, max_value=5))
    def test_count_bound(self, tokens, n):
        result = ngrams(tuple(tokens), n)
        assert len(result) <= max(len(tokens) - n + 1, 0)
        for gram in result.grams:
            assert len(gram) == n


class TestSharedNgrams:
    def test_worked_copy_example_yields_exactly_two(self):
        shared = shared_ngrams(
            ngrams(normalize(RESPONSE_TEXT), 3),
            ngrams(normalize(SOURCE_TEXT), 3),
        )
        assert shared.grams == EXPECTED_SHARED

    def test_identical_texts(self):
        grams = ngrams(normalize("one two three four"), 3)
        assert shared_ngrams(grams, grams).grams == grams.grams

    def test_disjoint_texts(self):
        a = ngrams(normalize("alpha beta gamma"), 2)
        b = ngrams(normalize("delta epsilon zeta"), 2)
        assert not shared_ngrams(a, b)

    def test_mismatched_widths_rejected(self):
        with pytest.raises(ValueError):
            shared_ngrams(NGramSet(2), NGramSet(3))

    @given(token_lists, token_lists, st.integers(min_value=1, max_value=3))
    def test_matches_bruteforce_pairwise(self, ta, tb, n):
        a, b = tuple(ta), tuple(tb)
        grams_a = [tuple(a[i : i + n]) for i in range(len(a) - n + 1)]
        grams_b = [tuple(b[i : i + n]) for i in range(len(b) - n + 1)]
        brute = {ga for ga in grams_a for gb in grams_b if ga == gb}
        assert shared_ngrams(ngrams(a, n), ngrams(b, n)).grams == brute


class TestJaccard:
    def test_identical_sets(self):
        grams = ngrams(("a", "b", "c"), 1)
        assert jaccard(grams, grams) == 1.0

    def test_disjoint_sets(self):
        assert jaccard(ngrams(("a",), 1), ngrams(("b",), 1)) == 0.0

    def test_half_overlap(self):
        a = ngrams(("x", "y", "z"), 1)
        b = ngrams(("x", "y", "w"), 1)
        assert jaccard(a, b) == pytest.approx(2 / 4)

    def test_both_empty(self):
        assert jaccard(NGramSet(3), NGramSet(3)) == 0.0

    @given(token_lists, token_lists)
    def test_symmetric_and_bounded(self, ta, tb):
        a = ngrams(tuple(ta), 2)
        b = ngrams(tuple(tb), 2)
        assert jaccard(a, b) == jaccard(b, a)
        assert 0.0 <= jaccard(a, b) <= 1.0


class TestLexicon:
    def test_from_file_skips_comments(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("# header\napple\nBanana\n\n# more\ncherry\n")
        lex = Lexicon.from_file(path)
        assert "apple" in lex and "banana" in lex and "cherry" in lex
        assert len(lex) == 3

    def test_empty_rejected(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n")
        with pytest.raises(ValueError):
            Lexicon.from_file(path)

    def test_validity_all_known(self):
        lex = Lexicon.from_words(["red", "blue"])
        assert lexical_validity(("red", "blue", "red"), lex) == 1.0

    def test_validity_gibberish(self, fixture_lexicon):
        tokens = normalize("asdkf qwelkj zzxcv")
        assert lexical_validity(tokens, fixture_lexicon) == 0.0

    def test_validity_half(self):
        lex = Lexicon.from_words(["red", "blue"])
        assert lexical_validity(("red", "blue", "xqz", "zzk"), lex) == 0.5

    def test_validity_empty_tokens(self, fixture_lexicon):
        assert lexical_validity((), fixture_lexicon) == 0.0
