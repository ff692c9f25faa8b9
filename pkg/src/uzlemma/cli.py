"""Command-line interface: batch lemmatization and data-file validation.

Records go to stdout, diagnostics to stderr, so the output is pipe-safe.
Exit codes: 0 success, 1 data-file load error, 2 bad flags, 3 input encoding
error, 4 manifest mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import data
from .affixes import AffixStore, load_affixes, load_manifest, validate_manifest
from .errors import DataFileError, LemmatizerError
from .fsm import LemmaResult
from .lexicon import Lexicon, load_lexicon
from .normalize import filter_tokens, normalize_text, tokenize
from .pipeline import lemmatize_token

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2
EXIT_ENCODING = 3
EXIT_MANIFEST = 4


@dataclass(frozen=True, slots=True)
class OutputRecord:
    """One result row: surface form, lemma, first POS, status, strip trace."""

    token: str
    lemma: str
    pos: str
    status: str
    trace: tuple[str, ...]

    @classmethod
    def from_result(cls, result: LemmaResult, surface: str) -> "OutputRecord":
        return cls(
            token=surface,
            lemma=result.lemma,
            pos=result.pos_candidates[0].value if result.pos_candidates else "-",
            status=result.status.value,
            trace=tuple(f"{s.removed}/{s.affix_class.value}" for s in result.trace),
        )

    def tsv_line(self, include_trace: bool) -> str:
        fields = [self.token, self.lemma, self.pos, self.status]
        if include_trace:
            fields.append(";".join(self.trace))
        return "\t".join(fields)

    def as_dict(self) -> dict:
        return {
            "token": self.token,
            "lemma": self.lemma,
            "pos": self.pos,
            "status": self.status,
            "trace": list(self.trace),
        }


def _load_stores(words: str, affixes: str) -> tuple[Lexicon, AffixStore]:
    return load_lexicon(words), load_affixes(affixes)


def _read_input(path: str | None) -> str:
    if path is None:
        return sys.stdin.buffer.read().decode("utf-8")
    with open(path, "rb") as f:
        return f.read().decode("utf-8")


def cmd_lemmatize(args: argparse.Namespace) -> int:
    try:
        lexicon, store = _load_stores(args.words, args.affixes)
    except (DataFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    try:
        raw = _read_input(args.input)
    except UnicodeDecodeError as exc:
        print(f"error: input is not valid UTF-8: {exc.reason}", file=sys.stderr)
        return EXIT_ENCODING
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR

    normalized = normalize_text(raw)
    word_tokens = filter_tokens(tokenize(normalized))
    # Normalization is one code point per code point except for exotic case
    # folds, so spans usually map straight back to the raw text and records
    # can show the original capitalization.
    surfaces_from_raw = len(normalized) == len(raw)
    records = []
    resolved = 0
    for token in word_tokens:
        result = lemmatize_token(token, lexicon, store)
        surface = raw[token.span[0] : token.span[1]] if surfaces_from_raw else token.surface
        records.append(OutputRecord.from_result(result, surface))
        if result.resolved:
            resolved += 1

    if args.format == "json":
        sys.stdout.write(json.dumps([r.as_dict() for r in records], ensure_ascii=False))
        sys.stdout.write("\n")
    else:
        for record in records:
            sys.stdout.write(record.tsv_line(include_trace=args.trace))
            sys.stdout.write("\n")
    print(f"tokens: {len(records)}, resolved: {resolved}", file=sys.stderr)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        lexicon, store = _load_stores(args.words, args.affixes)
    except (DataFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR

    print(f"words: {len(lexicon)} entries")
    print(f"affixes: {len(store)} entries")
    counts = store.cell_counts()
    for (pos, affix_class), (suffixes, allomorphs) in sorted(
        counts.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value)
    ):
        print(f"{pos.value}\t{affix_class.value}\t{suffixes} ({allomorphs})")

    if args.manifest is None:
        return EXIT_OK
    try:
        manifest = load_manifest(args.manifest)
    except (DataFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    report = validate_manifest(store, manifest)
    print("manifest check:")
    for cell in report.cells:
        verdict = "ok" if cell.ok else "MISMATCH"
        print(
            f"{cell.pos.value}\t{cell.affix_class.value}\t"
            f"expected {cell.expected[0]} ({cell.expected[1]})\t"
            f"actual {cell.actual[0]} ({cell.actual[1]})\t{verdict}"
        )
    if report.passed:
        print("manifest: pass")
        return EXIT_OK
    failed = sum(1 for c in report.cells if not c.ok)
    print(f"manifest: fail ({failed} cells mismatched)")
    return EXIT_MANIFEST


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uzlemma",
        description="Rule-based lemmatizer for Uzbek text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lem = sub.add_parser("lemmatize", help="lemmatize text from a file or stdin")
    lem.add_argument("--words", default=str(data.words_path()), help="word store TSV (default: bundled seed)")
    lem.add_argument("--affixes", default=str(data.affixes_path()), help="affix store TSV (default: bundled seed)")
    lem.add_argument("--input", default=None, help="input text file (default: stdin)")
    lem.add_argument("--format", choices=("tsv", "json"), default="tsv", help="output format")
    lem.add_argument("--trace", action="store_true", help="include the strip trace column in TSV output")
    lem.set_defaults(func=cmd_lemmatize)

    val = sub.add_parser("validate", help="load the data files and report affix counts")
    val.add_argument("--words", default=str(data.words_path()), help="word store TSV (default: bundled seed)")
    val.add_argument("--affixes", default=str(data.affixes_path()), help="affix store TSV (default: bundled seed)")
    val.add_argument("--manifest", default=None, help="expected-count manifest TSV to check against")
    val.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LemmatizerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
