import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uzlemma import (
    PosTag,
    ResolutionStatus,
    Token,
    TokenKind,
    filter_tokens,
    lemmatize_text,
    lemmatize_token,
    normalize_text,
    oracle_lemmatize,
    tokenize,
)

TC = "ʻ"


def word_token(word: str) -> Token:
    return Token(surface=word, normalized=word, span=(0, len(word)), kind=TokenKind.WORD)


text_strategy = st.text(
    alphabet=st.sampled_from("abdgiklmnoqrstuvz 'KO.,!2013-" + TC), max_size=40
)


class TestLemmatizeToken:
    def test_direct_hit_has_empty_trace(self, lexicon, affix_store):
        result = lemmatize_token(word_token("kitob"), lexicon, affix_store)
        assert result.resolved
        assert result.lemma == "kitob"
        assert result.trace == ()
        assert result.pos_candidates == (PosTag.NOUN,)

    def test_participle_restores_infinitive(self, lexicon, affix_store):
        result = lemmatize_token(word_token(f"o{TC}qigan"), lexicon, affix_store)
        assert result.lemma == f"o{TC}qimoq"
        assert result.pos_candidates == (PosTag.VERB,)

    def test_closed_class_resolves_by_lookup_only(self, lexicon, affix_store):
        result = lemmatize_token(word_token("ham"), lexicon, affix_store)
        assert result.resolved
        assert result.lemma == "ham"
        assert result.pos_candidates == (PosTag.PART,)
        assert result.trace == ()

    def test_non_word_token_rejected(self, lexicon, affix_store):
        number = Token(surface="12", normalized="12", span=(0, 2), kind=TokenKind.NUMBER)
        with pytest.raises(ValueError):
            lemmatize_token(number, lexicon, affix_store)


class TestLemmatizeText:
    def test_sentence_with_punctuation(self, lexicon, affix_store):
        results = lemmatize_text("Kitoblardagina.", lexicon, affix_store)
        assert [(r.lemma, r.status) for r in results] == [("kitob", ResolutionStatus.RESOLVED)]

    def test_empty_text(self, lexicon, affix_store):
        assert lemmatize_text("", lexicon, affix_store) == []

    def test_pronoun_and_possessive(self, lexicon, affix_store):
        results = lemmatize_text("men kitobimning", lexicon, affix_store)
        assert [r.lemma for r in results] == ["men", "kitob"]
        assert all(r.resolved for r in results)

    def test_unresolved_words_are_flagged_not_dropped(self, lexicon, affix_store):
        results = lemmatize_text("qwerty kitob", lexicon, affix_store)
        assert [r.status for r in results] == [
            ResolutionStatus.UNRESOLVED,
            ResolutionStatus.RESOLVED,
        ]

    @given(text_strategy)
    @settings(max_examples=60)
    def test_composition_law(self, lexicon, affix_store, raw):
        composed = [
            lemmatize_token(token, lexicon, affix_store)
            for token in filter_tokens(tokenize(normalize_text(raw)))
        ]
        assert lemmatize_text(raw, lexicon, affix_store) == composed

    @given(text_strategy)
    @settings(max_examples=40)
    def test_deterministic(self, lexicon, affix_store, raw):
        assert lemmatize_text(raw, lexicon, affix_store) == lemmatize_text(raw, lexicon, affix_store)


class TestOracle:
    def test_possessive_genitive_chain(self, lexicon, affix_store):
        assert oracle_lemmatize("kitobimning", lexicon, affix_store) == "kitob"

    def test_lemma_found_at_depth_zero(self, lexicon, affix_store):
        assert oracle_lemmatize("kitob", lexicon, affix_store) == "kitob"

    def test_derivation_with_plural_and_case(self, lexicon, affix_store):
        assert oracle_lemmatize("paxtakorlarga", lexicon, affix_store) == "paxtakor"

    def test_unreachable_word_is_none(self, lexicon, affix_store):
        assert oracle_lemmatize("xyzqwe", lexicon, affix_store) is None

    def test_restoration_at_depth_zero(self, lexicon, affix_store):
        assert oracle_lemmatize("bor", lexicon, affix_store) == "bormoq"

    def test_length_bound_enforced(self, lexicon, affix_store):
        with pytest.raises(ValueError):
            oracle_lemmatize("a" * 41, lexicon, affix_store)

    def test_agrees_with_engine_on_corpus_sample(self, corpus_forms, lexicon, affix_store):
        for word in corpus_forms[::97]:
            result = lemmatize_token(word_token(word), lexicon, affix_store)
            expected = oracle_lemmatize(word, lexicon, affix_store)
            if result.resolved:
                assert result.lemma == expected, word
            else:
                assert expected is None, word

    def test_no_invented_lemmas(self, corpus_forms, lexicon, affix_store):
        for word in corpus_forms[::97]:
            result = lemmatize_token(word_token(word), lexicon, affix_store)
            if result.resolved:
                assert lexicon.lookup(result.lemma)
