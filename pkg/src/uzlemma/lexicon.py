"""The word store: an immutable lemma dictionary keyed by normalized form.

Lemmas are stored lowercase with canonical apostrophes; verbs are stored in
their ``-moq`` infinitive form.  Lookup returns every entry for a form,
ordered by a fixed part-of-speech priority so homonym resolution is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator

from ._tsv import iter_tsv
from .errors import DataFileError
from .normalize import is_normalized_word_form


class PosClass(Enum):
    OPEN = "open"
    CLOSED = "closed"
    INTERMEDIATE = "intermediate"


class PosTag(Enum):
    VERB = "VERB"
    PRON = "PRON"
    NOUN = "NOUN"
    ADV = "ADV"
    ADJ = "ADJ"
    NUM = "NUM"
    CONJ = "CONJ"
    AUX = "AUX"
    PART = "PART"
    MODAL = "MODAL"
    IMIT = "IMIT"
    INTJ = "INTJ"

    @property
    def pos_class(self) -> PosClass:
        return _POS_CLASS[self]


_POS_CLASS: dict[PosTag, PosClass] = {
    PosTag.VERB: PosClass.OPEN,
    PosTag.PRON: PosClass.OPEN,
    PosTag.NOUN: PosClass.OPEN,
    PosTag.ADV: PosClass.OPEN,
    PosTag.ADJ: PosClass.OPEN,
    PosTag.NUM: PosClass.OPEN,
    PosTag.CONJ: PosClass.CLOSED,
    PosTag.AUX: PosClass.CLOSED,
    PosTag.PART: PosClass.CLOSED,
    PosTag.MODAL: PosClass.INTERMEDIATE,
    PosTag.IMIT: PosClass.INTERMEDIATE,
    PosTag.INTJ: PosClass.INTERMEDIATE,
}

# Fixed lookup priority for homonyms: open classes first (nouns before
# verbs), then closed, then intermediate.
POS_PRIORITY: dict[PosTag, int] = {
    tag: rank
    for rank, tag in enumerate(
        [
            PosTag.NOUN,
            PosTag.VERB,
            PosTag.ADJ,
            PosTag.NUM,
            PosTag.ADV,
            PosTag.PRON,
            PosTag.CONJ,
            PosTag.AUX,
            PosTag.PART,
            PosTag.MODAL,
            PosTag.IMIT,
            PosTag.INTJ,
        ]
    )
}

INFINITIVE_SUFFIX = "moq"


@dataclass(frozen=True, slots=True)
class LexiconEntry:
    lemma: str
    pos: PosTag
    takes_affixes: bool


class Lexicon:
    """Immutable lookup structure over lexicon entries."""

    __slots__ = ("_by_form",)

    def __init__(self, entries: Iterable[LexiconEntry]):
        grouped: dict[str, dict[PosTag, LexiconEntry]] = {}
        for entry in entries:
            bucket = grouped.setdefault(entry.lemma, {})
            # Duplicate (lemma, pos) rows collapse to the first one seen.
            bucket.setdefault(entry.pos, entry)
        self._by_form: dict[str, tuple[LexiconEntry, ...]] = {
            form: tuple(sorted(bucket.values(), key=lambda e: POS_PRIORITY[e.pos]))
            for form, bucket in grouped.items()
        }

    def lookup(self, form: str) -> tuple[LexiconEntry, ...]:
        """All entries whose lemma equals ``form``, in POS-priority order."""
        return self._by_form.get(form, ())

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_form.values())

    def __contains__(self, form: str) -> bool:
        return form in self._by_form

    def entries(self) -> Iterator[LexiconEntry]:
        for form in sorted(self._by_form):
            yield from self._by_form[form]

    def pos_counts(self) -> dict[PosTag, int]:
        counts: dict[PosTag, int] = {}
        for entry in self.entries():
            counts[entry.pos] = counts.get(entry.pos, 0) + 1
        return counts


def load_lexicon(source: BinaryIO | str | Path) -> Lexicon:
    """Load the word store from TSV: ``lemma<TAB>POS<TAB>takes_affixes``.

    Rejects, with the line number: unknown POS codes, non-normalized lemmas,
    verbs not in ``-moq`` form, bad flag values, and closed-class rows
    claiming to take affixes.
    """
    entries: list[LexiconEntry] = []
    for lineno, (lemma, pos_code, flag) in _rows(source):
        try:
            pos = PosTag(pos_code)
        except ValueError:
            raise DataFileError(f"unknown POS code {pos_code!r}", path=_path_of(source), line=lineno) from None
        if not is_normalized_word_form(lemma):
            raise DataFileError(
                f"lemma {lemma!r} is not a normalized word form",
                path=_path_of(source),
                line=lineno,
            )
        if flag not in ("0", "1"):
            raise DataFileError(
                f"takes_affixes must be 0 or 1, got {flag!r}", path=_path_of(source), line=lineno
            )
        takes_affixes = flag == "1"
        if pos.pos_class is PosClass.CLOSED and takes_affixes:
            raise DataFileError(
                f"{pos.value} is a closed class and cannot take affixes",
                path=_path_of(source),
                line=lineno,
            )
        if pos is PosTag.VERB and not lemma.endswith(INFINITIVE_SUFFIX):
            raise DataFileError(
                f"verb lemma {lemma!r} must end in {INFINITIVE_SUFFIX!r}",
                path=_path_of(source),
                line=lineno,
            )
        entries.append(LexiconEntry(lemma=lemma, pos=pos, takes_affixes=takes_affixes))
    return Lexicon(entries)


def _rows(source) -> Iterator[tuple[int, list[str]]]:
    return iter_tsv(source, columns=3)


def _path_of(source) -> str | None:
    return str(source) if isinstance(source, (str, Path)) else None
