"""Exception types shared across the package.

Everything raised for bad input data derives from TempocError so the CLI can
map it to a single exit code; programmer errors stay plain ValueError.
"""


class TempocError(Exception):
    pass


class ParseError(TempocError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DataError(TempocError):
    """Structurally valid input that violates a precondition."""
