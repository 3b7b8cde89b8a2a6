"""Exception types shared across the package."""

from __future__ import annotations


class TwcertError(Exception):
    """Base class for package-specific failures."""


class InputFormatError(TwcertError):
    """Malformed text input; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotNiceError(TwcertError):
    """Raised when an operation requires a graph with no isolated-edge component."""


class ConstructionError(TwcertError):
    """A covering-family or assignment construction hit an unmet precondition.

    Carries enough context (vertex/edge) to report the failure; callers with a
    fallback route catch this and take it.
    """


class PreconditionError(TwcertError):
    """An operation's stated precondition failed (reported distinctly from a verdict)."""


class FalsificationError(TwcertError):
    """An identity that must hold on every instance came out false.

    This is a release blocker: it means either the implementation or the
    transcription of the underlying construction is wrong.  Never swallowed.
    """
