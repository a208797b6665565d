"""Exception hierarchy.

Errors split into two families: ``DomainError`` for bad inputs (the caller
asked for something outside an operation's domain) and ``VerificationError``
for a checked identity that turned out false.  The CLI maps the first family
to exit code 2 and the second to exit code 1.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class ParseError(DomainError):
    """Malformed textual input (polynomials, rationals, b-files)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TruncationError(DomainError):
    """A coefficient beyond the known truncation order was requested."""


class SingularSeriesError(DomainError):
    """Reciprocal of a series whose constant term is not invertible."""


class CompositionOrderError(DomainError):
    """Inner series of a composition has a nonzero constant term."""


class ReversionDomainError(DomainError):
    """Series cannot be compositionally inverted."""


class ImproperArrayError(DomainError):
    """p(0) = 0, so the Riordan array would not be proper."""


class VerificationError(AssertionError):
    """A verified claim failed.  ``report`` carries the evidence."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class TheoremViolation(VerificationError):
    pass


class IdentityViolation(VerificationError):
    pass


class DiagonalizationError(VerificationError):
    pass


class OEISUnavailable(RuntimeError):
    """No network access and no cached or bundled copy of a b-file."""
