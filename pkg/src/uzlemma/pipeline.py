"""End-to-end lemmatization: normalize, tokenize, filter, look up, strip.

Also home of the brute-force reference lemmatizer used for differential
testing: it enumerates every legal removal sequence breadth-first instead of
walking the staged machine, so the two routes are independent.
"""

from __future__ import annotations

from .affixes import AffixPosition, AffixStore
from .fsm import LemmaResult, ResolutionStatus, restore_infinitive, run_fsm
from .lexicon import POS_PRIORITY, Lexicon
from .normalize import Token, TokenKind, filter_tokens, normalize_text, tokenize

ORACLE_MAX_WORD_LENGTH = 40


def lemmatize_token(token: Token, lexicon: Lexicon, store: AffixStore) -> LemmaResult:
    """Resolve one word token: direct lexicon hit first, stripping second."""
    if token.kind is not TokenKind.WORD:
        raise ValueError(f"lemmatize_token requires a word token, got {token.kind.value}")
    entries = lexicon.lookup(token.normalized)
    if entries:
        return LemmaResult(
            token=token,
            lemma=token.normalized,
            pos_candidates=tuple(e.pos for e in entries),
            trace=(),
            status=ResolutionStatus.RESOLVED,
        )
    return run_fsm(token.normalized, store, lexicon, token=token)


def lemmatize_text(raw: str, lexicon: Lexicon, store: AffixStore) -> list[LemmaResult]:
    """Lemmatize every word token of ``raw``, in order.

    Exactly the composition of the module operations; punctuation and number
    tokens are dropped, unresolved words are flagged rather than omitted.
    Pure function of immutable stores, safe to call concurrently.
    """
    tokens = filter_tokens(tokenize(normalize_text(raw)))
    return [lemmatize_token(token, lexicon, store) for token in tokens]


def oracle_lemmatize(word: str, lexicon: Lexicon, store: AffixStore) -> str | None:
    """Reference lemmatizer by exhaustive enumeration; no staged machine.

    Explores all suffix-removal sequences (any class order, any allomorph,
    stems kept at two characters or more) breadth-first by removal count,
    checking both each stem and its restored infinitive.  Among hits at the
    same depth the lexicon POS priority wins, then the lemma string.  Returns
    None when no sequence reaches the lexicon.
    """
    if len(word) > ORACLE_MAX_WORD_LENGTH:
        raise ValueError(f"oracle word longer than {ORACLE_MAX_WORD_LENGTH} characters")
    if not word:
        return None
    allomorphs = sorted(
        {
            allo
            for entry in store.entries()
            if entry.strip and entry.position is AffixPosition.SUFFIX
            for allo in entry.surface_forms
        }
    )
    frontier = [word]
    seen = {word}
    while frontier:
        best: tuple[tuple[int, str], str] | None = None
        for stem in frontier:
            for candidate in {stem, restore_infinitive(stem)}:
                entries = lexicon.lookup(candidate)
                if entries:
                    key = (POS_PRIORITY[entries[0].pos], candidate)
                    if best is None or key < best[0]:
                        best = (key, candidate)
        if best is not None:
            return best[1]
        next_frontier = set()
        for stem in frontier:
            for allo in allomorphs:
                if len(stem) - len(allo) >= 2 and stem.endswith(allo):
                    child = stem[: -len(allo)]
                    if child not in seen:
                        seen.add(child)
                        next_frontier.add(child)
        frontier = sorted(next_frontier)
    return None
