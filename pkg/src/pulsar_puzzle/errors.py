"""Exception types shared across the package."""


class PulsarError(Exception):
    """Base class for all package-specific errors."""


class CoordinateError(PulsarError, ValueError):
    """A triangular-array coordinate, grid cell, or flattened index is out of range."""


class SizeError(PulsarError, ValueError):
    """A grid or piece size is out of range."""


class GridFormatError(PulsarError, ValueError):
    """A grid object is structurally malformed (dimensions or value range)."""


class GridParseError(PulsarError, ValueError):
    """A grid document failed to parse.

    ``line`` and ``column`` are 1-based when known, else None.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class SearchSizeError(PulsarError, ValueError):
    """Requested exhaustive-search size exceeds the configured ceiling."""
