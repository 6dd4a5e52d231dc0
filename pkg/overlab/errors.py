"""Error hierarchy for overlab.

Every error is a ValueError so callers that only care about "bad input"
can catch that, and the CLI can map the finer classes to exit codes.
"""

from __future__ import annotations

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .predicates import MembershipReport


class OverlabError(ValueError):
    pass


class InvalidColorError(OverlabError):
    pass


class UndefinedDeltaStarError(OverlabError):
    pass


class InsufficientBitsError(OverlabError):
    pass


class InvalidRedistributionError(OverlabError):
    pass


class StaircaseTooLargeError(OverlabError):
    pass


class ConfigurationError(OverlabError):
    pass


class TruncationMismatchError(OverlabError):
    pass


class DilationRangeError(OverlabError):
    pass


class PreconditionError(OverlabError):
    """Input outside an operation's domain; may carry the failing membership report."""

    def __init__(self, message: str, report: Optional["MembershipReport"] = None):
        super().__init__(message)
        self.report = report


class MalformedOperandError(PreconditionError):
    """An operand of the wrong shape, such as mu in the wrong color; a usage error."""


class LemmaViolation(OverlabError):
    """A checked-mode assertion failed. `lemma` is a stable identifier."""

    def __init__(self, lemma: str, message: str):
        super().__init__(f"[{lemma}] {message}")
        self.lemma = lemma
