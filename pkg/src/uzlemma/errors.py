"""Exception types shared across the package."""


class LemmatizerError(Exception):
    """Base class for all errors raised by this package."""


class DataFileError(LemmatizerError):
    """A data file could not be parsed.

    Carries the offending path and 1-based line number when known, and puts
    both into the message so callers can report it verbatim.
    """

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = str(path) if path is not None else None
        self.line = line
        prefix = ""
        if self.path is not None:
            prefix = self.path if line is None else f"{self.path}:{line}"
            prefix += ": "
        elif line is not None:
            prefix = f"line {line}: "
        super().__init__(prefix + message)
