"""Staged suffix-stripping engine.

The machine mirrors the morpheme order of Uzbek words read right to left:
all grammatical suffixes come off in one multi-affix transition, then lexical
and derivational suffixes come off one at a time, with a dictionary lookup
after every removal so lexicalized forms win over deeper stripping.  A stage
that has nothing to remove is crossed by an empty transition.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .affixes import OPEN_CLASS_TAGS, AffixClass, AffixStore
from .lexicon import INFINITIVE_SUFFIX, Lexicon, LexiconEntry, PosTag
from .normalize import Token, TokenKind


class FsmStage(Enum):
    START = 0
    GRAMMATICAL_DONE = 1
    LEXICAL_STRIPPING = 2
    DERIVATIONAL_STRIPPING = 3
    ACCEPT = 4


class TransitionKind(Enum):
    MULTI_AFFIX = "multi"
    SINGLE_AFFIX = "single"
    EPSILON = "epsilon"


@dataclass(frozen=True, slots=True)
class FsmState:
    id: str
    stage: FsmStage


@dataclass(frozen=True, slots=True)
class Transition:
    source: str
    target: str
    kind: TransitionKind
    affix_class: AffixClass | None = None

    def __post_init__(self):
        if self.kind is TransitionKind.MULTI_AFFIX and self.affix_class is not AffixClass.GRAMMATICAL:
            raise ValueError("multi-affix transitions remove grammatical suffixes only")
        if self.kind is TransitionKind.EPSILON and self.affix_class is not None:
            raise ValueError("empty transitions carry no affix class")
        if self.kind is TransitionKind.SINGLE_AFFIX and self.affix_class is None:
            raise ValueError("single-affix transitions need an affix class")


STATES: tuple[FsmState, ...] = (
    FsmState("start", FsmStage.START),
    FsmState("gram_done", FsmStage.GRAMMATICAL_DONE),
    FsmState("lexical", FsmStage.LEXICAL_STRIPPING),
    FsmState("derivational", FsmStage.DERIVATIONAL_STRIPPING),
    FsmState("accept", FsmStage.ACCEPT),
)

TRANSITIONS: tuple[Transition, ...] = (
    Transition("start", "gram_done", TransitionKind.MULTI_AFFIX, AffixClass.GRAMMATICAL),
    Transition("start", "gram_done", TransitionKind.EPSILON),
    Transition("gram_done", "lexical", TransitionKind.EPSILON),
    Transition("lexical", "lexical", TransitionKind.SINGLE_AFFIX, AffixClass.LEXICAL),
    Transition("lexical", "derivational", TransitionKind.EPSILON),
    Transition("derivational", "derivational", TransitionKind.SINGLE_AFFIX, AffixClass.DERIVATIONAL),
    Transition("derivational", "accept", TransitionKind.EPSILON),
)

_STATE_BY_ID = {s.id: s for s in STATES}
_AFFIX_OUT = {t.source: t for t in TRANSITIONS if t.kind is not TransitionKind.EPSILON}
_EPSILON_OUT = {t.source: t for t in TRANSITIONS if t.kind is TransitionKind.EPSILON}


def _walk_plan() -> tuple[tuple[FsmState, Transition | None], ...]:
    """Linearize the machine: each state with its affix transition, if any."""
    plan = []
    state_id = "start"
    while True:
        state = _STATE_BY_ID[state_id]
        plan.append((state, _AFFIX_OUT.get(state_id)))
        if state.stage is FsmStage.ACCEPT:
            return tuple(plan)
        state_id = _EPSILON_OUT[state_id].target


_PLAN = _walk_plan()


@dataclass(frozen=True, slots=True)
class StripStep:
    """One removed allomorph: ``stem_after + removed`` is the previous stem."""

    removed: str
    affix_id: str
    affix_class: AffixClass
    stem_after: str


class ResolutionStatus(Enum):
    RESOLVED = "resolved"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True, slots=True)
class LemmaResult:
    """Per-token output: lemma, POS candidates, strip trace, and status.

    ``stem`` is the surface remainder after stripping, before any infinitive
    restoration; for resolved verbs ``lemma`` may be ``stem + "moq"``.
    """

    token: Token
    lemma: str
    pos_candidates: tuple[PosTag, ...]
    trace: tuple[StripStep, ...]
    status: ResolutionStatus

    @property
    def resolved(self) -> bool:
        return self.status is ResolutionStatus.RESOLVED

    @property
    def stem(self) -> str:
        return self.trace[-1].stem_after if self.trace else self.token.normalized


def restore_infinitive(stem: str) -> str:
    """Append ``moq`` unless the stem already ends with it."""
    if not stem:
        raise ValueError("restore_infinitive requires a non-empty stem")
    return stem if stem.endswith(INFINITIVE_SUFFIX) else stem + INFINITIVE_SUFFIX


def _narrow_hint(hint: frozenset[PosTag], applies_to: frozenset[PosTag]) -> frozenset[PosTag]:
    # Hints narrow to the intersection of stripped affixes' POS sets, but an
    # empty intersection resets to the full open-class set rather than
    # wedging the strip loop.
    narrowed = hint & applies_to
    return narrowed if narrowed else OPEN_CLASS_TAGS


def _strip_many(
    word: str, store: AffixStore, hint: frozenset[PosTag]
) -> tuple[str, list[StripStep], frozenset[PosTag]]:
    stem = word
    steps: list[StripStep] = []
    while True:
        matches = store.match_suffixes(stem, AffixClass.GRAMMATICAL, hint)
        if not matches:
            return stem, steps, hint
        entry, allomorph = matches[0]
        stem = stem[: -len(allomorph)]
        steps.append(
            StripStep(removed=allomorph, affix_id=entry.id, affix_class=entry.affix_class, stem_after=stem)
        )
        hint = _narrow_hint(hint, entry.applies_to)


def strip_grammatical(
    word: str, store: AffixStore, pos_hint: frozenset[PosTag] | None = None
) -> tuple[str, list[StripStep]]:
    """Remove every grammatical suffix in one pass, rightmost first.

    Each round takes the longest matching allomorph; zero removals is a
    valid outcome.  Returns the remaining stem and the removal steps.
    """
    if not word:
        raise ValueError("strip_grammatical requires a non-empty word")
    stem, steps, _ = _strip_many(word, store, pos_hint if pos_hint is not None else OPEN_CLASS_TAGS)
    return stem, steps


def strip_one(
    word: str,
    store: AffixStore,
    affix_class: AffixClass,
    pos_hint: frozenset[PosTag] | None = None,
) -> tuple[str, StripStep] | None:
    """Remove the single longest matching suffix of ``affix_class``, if any."""
    if affix_class is AffixClass.GRAMMATICAL:
        raise ValueError("grammatical suffixes are removed by strip_grammatical")
    if not word:
        raise ValueError("strip_one requires a non-empty word")
    matches = store.match_suffixes(word, affix_class, pos_hint)
    if not matches:
        return None
    entry, allomorph = matches[0]
    stem = word[: -len(allomorph)]
    return stem, StripStep(
        removed=allomorph, affix_id=entry.id, affix_class=entry.affix_class, stem_after=stem
    )


def _lookup_with_restore(
    lexicon: Lexicon, stem: str
) -> tuple[str, tuple[LexiconEntry, ...]] | None:
    entries = lexicon.lookup(stem)
    if entries:
        return stem, entries
    restored = restore_infinitive(stem)
    if restored != stem:
        entries = lexicon.lookup(restored)
        if entries:
            return restored, entries
    return None


def _synthetic_token(word: str) -> Token:
    return Token(surface=word, normalized=word, span=(0, len(word)), kind=TokenKind.WORD)


def run_fsm(
    word: str, store: AffixStore, lexicon: Lexicon, *, token: Token | None = None
) -> LemmaResult:
    """Strip ``word`` stage by stage until a lexicon hit or exhaustion.

    After the grammatical pass and after every later removal, both the
    current stem and its restored infinitive are looked up; the first hit
    resolves the word.  When no suffix of any class matches and no lookup
    hits, the result is unresolved with the final stem as best effort.
    """
    if not word:
        raise ValueError("run_fsm requires a non-empty word")
    if token is None:
        token = _synthetic_token(word)

    stem = word
    steps: list[StripStep] = []
    hint = OPEN_CLASS_TAGS

    def resolved(hit: tuple[str, tuple[LexiconEntry, ...]]) -> LemmaResult:
        lemma, entries = hit
        return LemmaResult(
            token=token,
            lemma=lemma,
            pos_candidates=tuple(e.pos for e in entries),
            trace=tuple(steps),
            status=ResolutionStatus.RESOLVED,
        )

    for state, affix_transition in _PLAN:
        if state.stage is FsmStage.ACCEPT or affix_transition is None:
            continue
        if affix_transition.kind is TransitionKind.MULTI_AFFIX:
            stem, gram_steps, hint = _strip_many(stem, store, hint)
            steps.extend(gram_steps)
            # Lookup happens after the whole transition, removals or not.
            hit = _lookup_with_restore(lexicon, stem)
            if hit:
                return resolved(hit)
        else:
            while True:
                removal = strip_one(stem, store, affix_transition.affix_class, hint)
                if removal is None:
                    break
                stem, step = removal
                steps.append(step)
                hint = _narrow_hint(hint, store.entry(step.affix_id).applies_to)
                hit = _lookup_with_restore(lexicon, stem)
                if hit:
                    return resolved(hit)

    return LemmaResult(
        token=token,
        lemma=stem,
        pos_candidates=(),
        trace=tuple(steps),
        status=ResolutionStatus.UNRESOLVED,
    )
