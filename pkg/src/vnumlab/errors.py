"""Stable error types shared across the package.

Every raised error carries a short machine-readable ``code`` so scripts can
branch on failures without parsing prose.  The CLI maps DomainError to exit
code 1 and ParseError to exit code 2.
"""
from __future__ import annotations


class DomainError(Exception):
    """A well-formed request that the mathematics rejects (e.g. colon by zero)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ParseError(Exception):
    """Malformed input text or problem document."""

    def __init__(self, code: str, message: str, where: str | None = None,
                 line: int | None = None, column: int | None = None):
        loc = ""
        if where is not None:
            loc += f" at {where}"
        if line is not None:
            loc += f" (line {line}, column {column})"
        elif column is not None:
            loc += f" (column {column})"
        super().__init__(message + loc)
        self.code = code
        self.where = where
        self.line = line
        self.column = column
