"""Exception hierarchy.

Ingestion problems and analysis problems are separate branches so the CLI
can map them to different exit codes.
"""

from __future__ import annotations


class TrendError(Exception):
    """Base class for all package errors."""


class ParameterError(TrendError, ValueError):
    """An argument is outside its allowed domain (bad k, n, window size...)."""


class IngestError(TrendError):
    """Input data could not be read into a corpus."""


class ParseError(IngestError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DateError(ParseError):
    pass


class DuplicateIdError(IngestError):
    def __init__(
        self, doc_id: str, first_line: int | None = None, second_line: int | None = None
    ):
        self.doc_id = doc_id
        self.lines = (first_line, second_line)
        message = f"duplicate id {doc_id!r}"
        if first_line is not None:
            message += f" on lines {first_line} and {second_line}"
        super().__init__(message)


class RangeError(ParameterError):
    pass


class AnalysisError(TrendError):
    """The data is well formed but cannot support the requested analysis."""


class UndefinedScoreError(AnalysisError):
    """Chi score requested for an n-gram that never occurs in the corpus."""


class DomainError(AnalysisError, ValueError):
    pass


class ClusterError(TrendError):
    pass


class ClusterConflictError(ClusterError):
    def __init__(self, term: str, first: str, second: str):
        self.term = term
        super().__init__(
            f"term {term!r} appears in both cluster {first!r} and {second!r}"
        )


class ClusterValidationError(ClusterError):
    pass
