"""Line-oriented TSV reading shared by the data-file loaders."""

from __future__ import annotations

from pathlib import Path
from typing import BinaryIO, Iterator

from .errors import DataFileError


def iter_tsv(
    source: BinaryIO | str | Path,
    *,
    columns: int,
    path: str | None = None,
) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line_number, fields)`` for every data row of a TSV source.

    ``source`` may be a filesystem path or a readable byte stream.  Blank
    lines and ``#``-prefixed comment lines are skipped.  Bad UTF-8 or a wrong
    column count raises :class:`DataFileError` naming the line.
    """
    opened = False
    if isinstance(source, (str, Path)):
        path = path or str(source)
        stream: BinaryIO = open(source, "rb")
        opened = True
    else:
        stream = source
    try:
        for lineno, raw in enumerate(stream, start=1):
            if isinstance(raw, str):
                line = raw
            else:
                try:
                    line = raw.decode("utf-8")
                except UnicodeDecodeError as exc:
                    raise DataFileError(f"invalid UTF-8: {exc.reason}", path=path, line=lineno) from exc
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != columns:
                raise DataFileError(
                    f"expected {columns} tab-separated fields, got {len(fields)}",
                    path=path,
                    line=lineno,
                )
            yield lineno, fields
    finally:
        if opened:
            stream.close()
