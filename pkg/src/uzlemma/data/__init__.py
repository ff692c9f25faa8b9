"""Bundled seed data files."""

from pathlib import Path

_DIR = Path(__file__).resolve().parent


def words_path() -> Path:
    """Path to the seed word store."""
    return _DIR / "words.tsv"


def affixes_path() -> Path:
    """Path to the seed affix store."""
    return _DIR / "affixes.tsv"


def reference_manifest_path() -> Path:
    """Path to the reference count manifest for a complete affix inventory."""
    return _DIR / "reference_manifest.tsv"
