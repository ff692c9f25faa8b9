"""The affix store: suffix inventory with allomorphs, classes, and POS scope.

Inflectional suffixes come in two kinds (grammatical and lexical) and are
stripped before derivational ones; prefixes are recorded but never stripped,
because they are part of the lemma.  The store also carries the machinery to
check itself against a reference count manifest, cell by (POS, class) cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import BinaryIO, Iterable, NamedTuple

from ._tsv import iter_tsv
from .errors import DataFileError
from .lexicon import PosClass, PosTag


class AffixClass(Enum):
    DERIVATIONAL = "DER"
    LEXICAL = "LEX"
    GRAMMATICAL = "GRAM"

    @property
    def strip_rank(self) -> int:
        """Stripping order: grammatical first, derivational last."""
        return _STRIP_RANK[self]


_STRIP_RANK = {AffixClass.GRAMMATICAL: 0, AffixClass.LEXICAL: 1, AffixClass.DERIVATIONAL: 2}


class AffixPosition(Enum):
    SUFFIX = "SUF"
    PREFIX = "PRE"


OPEN_CLASS_TAGS = frozenset(t for t in PosTag if t.pos_class is PosClass.OPEN)

MIN_STEM_LENGTH = 2


@dataclass(frozen=True, slots=True)
class AffixEntry:
    id: str
    surface_forms: tuple[str, ...]
    affix_class: AffixClass
    position: AffixPosition
    applies_to: frozenset[PosTag]
    strip: bool


class SuffixMatch(NamedTuple):
    entry: AffixEntry
    allomorph: str


class AffixStore:
    """Immutable affix inventory with longest-match suffix lookup."""

    __slots__ = ("_entries", "_match_index")

    def __init__(self, entries: Iterable[AffixEntry]):
        self._entries: dict[str, AffixEntry] = {e.id: e for e in entries}
        index: dict[AffixClass, list[tuple[str, AffixEntry]]] = {c: [] for c in AffixClass}
        for entry in self._entries.values():
            if entry.position is AffixPosition.SUFFIX and entry.strip:
                for allo in entry.surface_forms:
                    index[entry.affix_class].append((allo, entry))
        for pairs in index.values():
            pairs.sort(key=lambda p: (-len(p[0]), p[1].id, p[0]))
        self._match_index = index

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, affix_id: str) -> AffixEntry:
        return self._entries[affix_id]

    def entries(self) -> tuple[AffixEntry, ...]:
        return tuple(self._entries[i] for i in sorted(self._entries))

    def match_suffixes(
        self,
        word: str,
        affix_class: AffixClass,
        pos_hint: frozenset[PosTag] | None = None,
    ) -> list[SuffixMatch]:
        """Every strippable allomorph of ``affix_class`` ending ``word``.

        Matches leave a stem of at least MIN_STEM_LENGTH characters and, when
        ``pos_hint`` is given, share at least one POS with it.  Ordered
        longest allomorph first, ties by entry id.
        """
        if not word:
            raise ValueError("match_suffixes requires a non-empty word")
        matches: list[SuffixMatch] = []
        for allo, entry in self._match_index[affix_class]:
            if len(word) - len(allo) < MIN_STEM_LENGTH:
                continue
            if not word.endswith(allo):
                continue
            if pos_hint is not None and not (entry.applies_to & pos_hint):
                continue
            matches.append(SuffixMatch(entry=entry, allomorph=allo))
        return matches

    def cell_counts(self) -> dict[tuple[PosTag, AffixClass], tuple[int, int]]:
        """(suffix count, allomorph count) per (POS, class), suffixes only."""
        counts: dict[tuple[PosTag, AffixClass], list[int]] = {}
        for entry in self.entries():
            if entry.position is not AffixPosition.SUFFIX:
                continue
            for pos in entry.applies_to:
                cell = counts.setdefault((pos, entry.affix_class), [0, 0])
                cell[0] += 1
                cell[1] += len(entry.surface_forms)
        return {key: (c[0], c[1]) for key, c in counts.items()}

    def to_tsv_rows(self) -> list[str]:
        """Dump the store back to loader-format rows (round-trip support)."""
        rows = []
        for entry in self.entries():
            pos_list = ",".join(sorted(t.value for t in entry.applies_to))
            for allo in entry.surface_forms:
                rows.append(
                    "\t".join(
                        [
                            entry.id,
                            allo,
                            entry.affix_class.value,
                            entry.position.value,
                            pos_list,
                            "1" if entry.strip else "0",
                        ]
                    )
                )
        return rows


def load_affixes(source: BinaryIO | str | Path) -> AffixStore:
    """Load the affix store from TSV.

    Row format: ``id<TAB>allomorph<TAB>class<TAB>position<TAB>pos_list<TAB>strip``.
    Rows sharing an id form one entry and must agree on everything but the
    allomorph.  Rejected with the line number: empty allomorphs, unknown
    class/position/POS codes, POS outside the open classes, prefixes marked
    strippable, and metadata conflicts between rows of one entry.
    """
    path = str(source) if isinstance(source, (str, Path)) else None
    building: dict[str, dict] = {}
    for lineno, (affix_id, allomorph, class_code, pos_code, pos_list, strip_flag) in iter_tsv(
        source, columns=6
    ):
        if not affix_id:
            raise DataFileError("empty affix id", path=path, line=lineno)
        if not allomorph:
            raise DataFileError("empty allomorph", path=path, line=lineno)
        try:
            affix_class = AffixClass(class_code)
        except ValueError:
            raise DataFileError(f"unknown affix class {class_code!r}", path=path, line=lineno) from None
        try:
            position = AffixPosition(pos_code)
        except ValueError:
            raise DataFileError(f"unknown position {pos_code!r}", path=path, line=lineno) from None
        tags = set()
        for code in pos_list.split(","):
            try:
                tag = PosTag(code.strip())
            except ValueError:
                raise DataFileError(f"unknown POS code {code.strip()!r}", path=path, line=lineno) from None
            if tag not in OPEN_CLASS_TAGS:
                raise DataFileError(
                    f"{tag.value} is not an open class; affixes apply to open classes only",
                    path=path,
                    line=lineno,
                )
            tags.add(tag)
        if strip_flag not in ("0", "1"):
            raise DataFileError(f"strip must be 0 or 1, got {strip_flag!r}", path=path, line=lineno)
        strip = strip_flag == "1"
        if position is AffixPosition.PREFIX and strip:
            raise DataFileError(
                "prefixes are part of the lemma and cannot be marked strippable",
                path=path,
                line=lineno,
            )
        meta = (affix_class, position, frozenset(tags), strip)
        slot = building.get(affix_id)
        if slot is None:
            building[affix_id] = {"meta": meta, "allomorphs": [allomorph], "line": lineno}
        else:
            if slot["meta"] != meta:
                raise DataFileError(
                    f"rows for affix id {affix_id!r} disagree on class/position/POS/strip",
                    path=path,
                    line=lineno,
                )
            if allomorph not in slot["allomorphs"]:
                slot["allomorphs"].append(allomorph)
    entries = [
        AffixEntry(
            id=affix_id,
            surface_forms=tuple(slot["allomorphs"]),
            affix_class=slot["meta"][0],
            position=slot["meta"][1],
            applies_to=slot["meta"][2],
            strip=slot["meta"][3],
        )
        for affix_id, slot in building.items()
    ]
    return AffixStore(entries)


class AffixManifest:
    """Expected (suffix count, allomorph count) per (POS, class) cell.

    Cells absent from the manifest are expected to be (0, 0).
    """

    __slots__ = ("expected_counts",)

    def __init__(self, expected_counts: dict[tuple[PosTag, AffixClass], tuple[int, int]]):
        self.expected_counts = dict(expected_counts)


def load_manifest(source: BinaryIO | str | Path) -> AffixManifest:
    """Load a count manifest from TSV: ``pos<TAB>class<TAB>suffixes<TAB>allomorphs``."""
    path = str(source) if isinstance(source, (str, Path)) else None
    cells: dict[tuple[PosTag, AffixClass], tuple[int, int]] = {}
    for lineno, (pos_code, class_code, suffixes, allomorphs) in iter_tsv(source, columns=4):
        try:
            pos = PosTag(pos_code)
            affix_class = AffixClass(class_code)
        except ValueError as exc:
            raise DataFileError(str(exc), path=path, line=lineno) from None
        try:
            counts = (int(suffixes), int(allomorphs))
        except ValueError:
            raise DataFileError("counts must be integers", path=path, line=lineno) from None
        if counts[0] < 0 or counts[1] < 0:
            raise DataFileError("counts must be non-negative", path=path, line=lineno)
        if (pos, affix_class) in cells:
            raise DataFileError(
                f"duplicate manifest cell {pos.value}/{affix_class.value}", path=path, line=lineno
            )
        cells[(pos, affix_class)] = counts
    return AffixManifest(cells)


@dataclass(frozen=True, slots=True)
class CellCheck:
    pos: PosTag
    affix_class: AffixClass
    expected: tuple[int, int]
    actual: tuple[int, int]

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True, slots=True)
class ManifestReport:
    cells: tuple[CellCheck, ...]

    @property
    def passed(self) -> bool:
        return all(cell.ok for cell in self.cells)


_POS_ORDER = {tag: i for i, tag in enumerate(PosTag)}
_CLASS_ORDER = {c: i for i, c in enumerate(AffixClass)}


def validate_manifest(store: AffixStore, manifest: AffixManifest) -> ManifestReport:
    """Compare the store's per-cell counts against the manifest.

    The report covers the union of manifest cells and non-empty store cells;
    it passes only if every cell matches exactly.
    """
    actual = store.cell_counts()
    keys = set(manifest.expected_counts) | set(actual)
    checks = [
        CellCheck(
            pos=pos,
            affix_class=affix_class,
            expected=manifest.expected_counts.get((pos, affix_class), (0, 0)),
            actual=actual.get((pos, affix_class), (0, 0)),
        )
        for pos, affix_class in sorted(keys, key=lambda k: (_POS_ORDER[k[0]], _CLASS_ORDER[k[1]]))
    ]
    return ManifestReport(cells=tuple(checks))
