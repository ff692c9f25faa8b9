import re

from hypothesis import given, settings
from hypothesis import strategies as st

from uzlemma import (
    TURNED_COMMA,
    TUTUQ,
    TokenKind,
    filter_tokens,
    normalize_text,
    tokenize,
)

TC = TURNED_COMMA
TQ = TUTUQ

# Realistic Uzbek-Latin-ish text: letters, digits, apostrophe variants,
# punctuation, whitespace.
uzbek_text = st.text(
    alphabet=st.sampled_from(
        "abdefgijklmnopqrstuvxyzhABDEFGKOQSU0123456789 .,!?-‘’'`" + TC + TQ
    ),
    max_size=60,
)


class TestNormalizeText:
    def test_ascii_apostrophe_after_o_becomes_turned_comma(self):
        assert normalize_text("O'qigan") == f"o{TC}qigan"

    def test_canonical_input_is_identity(self):
        assert normalize_text("kitob") == "kitob"

    def test_mixed_quote_codepoints(self):
        assert normalize_text("G‘oz va A’lo") == f"g{TC}oz va a{TQ}lo"

    def test_right_quote_after_g(self):
        assert normalize_text("g’oz") == f"g{TC}oz"

    def test_grave_and_left_quote(self):
        assert normalize_text("o`zbek a‘lo") == f"o{TC}zbek a{TQ}lo"

    def test_turned_comma_not_after_og_becomes_tutuq(self):
        assert normalize_text(f"a{TC}lo") == f"a{TQ}lo"

    def test_tutuq_is_preserved_anywhere(self):
        assert normalize_text(f"a{TQ}lo o{TQ}z") == f"a{TQ}lo o{TQ}z"

    @given(uzbek_text)
    def test_idempotent(self, text):
        once = normalize_text(text)
        assert normalize_text(once) == once

    @given(st.text(max_size=60))
    def test_idempotent_arbitrary_unicode(self, text):
        once = normalize_text(text)
        assert normalize_text(once) == once

    @given(uzbek_text)
    def test_one_to_one_on_realistic_text(self, text):
        assert len(normalize_text(text)) == len(text)

    @given(uzbek_text)
    def test_no_uppercase_survives(self, text):
        assert not any(c.isupper() for c in normalize_text(text))


class TestTokenize:
    def test_single_word(self):
        tokens = tokenize("kitoblardagina")
        assert [(t.normalized, t.kind) for t in tokens] == [("kitoblardagina", TokenKind.WORD)]

    def test_word_number_punctuation(self):
        tokens = tokenize("men 2022.")
        assert [(t.surface, t.kind) for t in tokens] == [
            ("men", TokenKind.WORD),
            ("2022", TokenKind.NUMBER),
            (".", TokenKind.PUNCTUATION),
        ]

    def test_empty_input(self):
        assert tokenize("") == []

    def test_hyphenated_reduplication_splits(self):
        kinds = [(t.surface, t.kind) for t in tokenize("katta-katta")]
        assert kinds == [
            ("katta", TokenKind.WORD),
            ("-", TokenKind.PUNCTUATION),
            ("katta", TokenKind.WORD),
        ]

    def test_mixed_alphanumeric_splits(self):
        kinds = [(t.surface, t.kind) for t in tokenize("16-bob")]
        assert kinds == [
            ("16", TokenKind.NUMBER),
            ("-", TokenKind.PUNCTUATION),
            ("bob", TokenKind.WORD),
        ]

    def test_decimal_separators_stay_one_number(self):
        tokens = tokenize("3,14 1.2.3")
        assert [(t.surface, t.kind) for t in tokens] == [
            ("3,14", TokenKind.NUMBER),
            ("1.2.3", TokenKind.NUMBER),
        ]

    def test_trailing_separator_is_punctuation(self):
        tokens = tokenize("2022.")
        assert [t.surface for t in tokens] == ["2022", "."]

    def test_turned_comma_stays_in_word(self):
        tokens = tokenize(f"o{TC}qigan")
        assert [t.surface for t in tokens] == [f"o{TC}qigan"]

    def test_tutuq_word_internal_only(self):
        word, punct = tokenize(f"a{TQ}lo{TQ}")
        assert word.surface == f"a{TQ}lo" and word.kind is TokenKind.WORD
        assert punct.surface == TQ and punct.kind is TokenKind.PUNCTUATION

    def test_leading_apostrophe_is_punctuation(self):
        tokens = tokenize(f"{TQ}salom")
        assert [(t.surface, t.kind) for t in tokens] == [
            (TQ, TokenKind.PUNCTUATION),
            ("salom", TokenKind.WORD),
        ]

    @given(uzbek_text)
    def test_partition_reconstructs_input(self, text):
        normalized = normalize_text(text)
        tokens = tokenize(normalized)
        pos = 0
        for token in tokens:
            start, end = token.span
            assert start < end
            assert normalized[pos:start].strip() == ""
            assert normalized[start:end] == token.surface
            pos = end
        assert normalized[pos:].strip() == ""

    @given(uzbek_text)
    def test_kind_invariants(self, text):
        for token in tokenize(normalize_text(text)):
            if token.kind is TokenKind.NUMBER:
                assert re.fullmatch(r"[0-9]+([.,][0-9]+)*", token.normalized)
            elif token.kind is TokenKind.PUNCTUATION:
                assert not any(c.isalpha() and c not in (TC, TQ) for c in token.normalized)
                assert not any("0" <= c <= "9" for c in token.normalized)
            else:
                assert re.fullmatch(f"[a-z{TC}{TQ}]+", token.normalized)

    @given(st.text(max_size=60))
    def test_word_tokens_casefolded_on_arbitrary_text(self, text):
        for token in tokenize(normalize_text(text)):
            if token.kind is TokenKind.WORD:
                assert not any(c.isupper() for c in token.normalized)
                assert not any(c.isspace() for c in token.normalized)

    @given(uzbek_text)
    def test_deterministic(self, text):
        normalized = normalize_text(text)
        assert tokenize(normalized) == tokenize(normalized)


class TestFilterTokens:
    def test_drops_numbers_and_punctuation(self):
        tokens = tokenize(normalize_text("men 2022."))
        assert [t.surface for t in filter_tokens(tokens)] == ["men"]

    def test_empty(self):
        assert filter_tokens([]) == []

    def test_words_retained_in_order(self):
        tokens = tokenize(normalize_text(f"kitob o{TC}qildi"))
        assert [t.surface for t in filter_tokens(tokens)] == ["kitob", f"o{TC}qildi"]

    @given(uzbek_text)
    def test_no_digits_or_pure_punctuation_survive(self, text):
        for token in filter_tokens(tokenize(normalize_text(text))):
            assert token.kind is TokenKind.WORD
            assert not any("0" <= c <= "9" for c in token.normalized)
            assert any(c.isalpha() for c in token.normalized)
