"""Rule-based lemmatizer for Uzbek.

Inflected word forms are reduced to dictionary lemmas by staged suffix
stripping over two immutable data stores (a lemma lexicon and an affix
inventory), with a lookup after every removal so lexicalized forms survive.
"""

from .affixes import (
    AffixClass,
    AffixEntry,
    AffixManifest,
    AffixPosition,
    AffixStore,
    CellCheck,
    ManifestReport,
    SuffixMatch,
    load_affixes,
    load_manifest,
    validate_manifest,
)
from .errors import DataFileError, LemmatizerError
from .fsm import (
    FsmStage,
    FsmState,
    LemmaResult,
    ResolutionStatus,
    StripStep,
    Transition,
    TransitionKind,
    restore_infinitive,
    run_fsm,
    strip_grammatical,
    strip_one,
)
from .lexicon import (
    POS_PRIORITY,
    Lexicon,
    LexiconEntry,
    PosClass,
    PosTag,
    load_lexicon,
)
from .normalize import (
    TURNED_COMMA,
    TUTUQ,
    Token,
    TokenKind,
    filter_tokens,
    normalize_text,
    tokenize,
)
from .pipeline import lemmatize_text, lemmatize_token, oracle_lemmatize

__version__ = "0.1.0"

__all__ = [
    "AffixClass",
    "AffixEntry",
    "AffixManifest",
    "AffixPosition",
    "AffixStore",
    "CellCheck",
    "DataFileError",
    "FsmStage",
    "FsmState",
    "LemmaResult",
    "LemmatizerError",
    "Lexicon",
    "LexiconEntry",
    "ManifestReport",
    "POS_PRIORITY",
    "PosClass",
    "PosTag",
    "ResolutionStatus",
    "StripStep",
    "SuffixMatch",
    "Token",
    "TokenKind",
    "Transition",
    "TransitionKind",
    "TURNED_COMMA",
    "TUTUQ",
    "filter_tokens",
    "lemmatize_text",
    "lemmatize_token",
    "load_affixes",
    "load_lexicon",
    "load_manifest",
    "normalize_text",
    "oracle_lemmatize",
    "restore_infinitive",
    "run_fsm",
    "strip_grammatical",
    "strip_one",
    "tokenize",
    "validate_manifest",
    "__version__",
]
