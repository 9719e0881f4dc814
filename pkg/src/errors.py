"""Exception hierarchy for homkit.

Failing axioms are never exceptions: checks return a ``Report``. The classes
below cover malformed input, unmet preconditions and algebraic operations
that have no answer (singular matrices, non-invertible maps, ...).
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from models import InvertibilityFailure, Report


class HomkitError(Exception):
    """Base class for every error raised by homkit."""


class InvalidField(HomkitError, ValueError):
    """A field specification is malformed or its modulus is not prime."""


class FieldMismatch(HomkitError):
    """Operands live over different fields."""


class ShapeMismatch(HomkitError):
    """Dimensions of operands do not agree."""


class SpaceMismatch(HomkitError):
    """Linear maps do not share domain/codomain spaces."""


class NoSolution(HomkitError):
    """A linear system is inconsistent."""


class Singular(HomkitError):
    """A square matrix is not invertible."""


class NotEndomorphism(HomkitError):
    """A candidate twisting map breaks one of the Hopf endomorphism laws."""

    def __init__(self, law: str) -> None:
        super().__init__(f"map is not a Hopf endomorphism: {law} fails")
        self.law = law


class NotInvertible(HomkitError):
    """A map has no two-sided convolution inverse."""

    def __init__(self, reason: InvertibilityFailure, detail: str = "") -> None:
        message = f"not convolution invertible ({reason.value})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.reason = reason


class ConditionsFailed(HomkitError):
    """Construction preconditions were checked and at least one failed."""

    def __init__(self, what: str, reports: list[Report]) -> None:
        failed = [e.axiom for r in reports for e in r.entries if not e.passed]
        super().__init__(f"{what}: conditions failed: {', '.join(failed)}")
        self.reports = reports


class NotClosed(HomkitError):
    """A subspace is not closed under the product or the structure map."""

    def __init__(self, witness: tuple[int, ...]) -> None:
        super().__init__(f"subspace not closed; witness basis indices {witness}")
        self.witness = witness


class NotInA(HomkitError):
    """An element expected in the coinvariants lies outside them."""

    def __init__(self, what: str, witness: Any) -> None:
        super().__init__(f"{what} escapes the coinvariant subalgebra at {witness}")
        self.witness = witness


class FieldTooLarge(HomkitError):
    """An exhaustive search space exceeds the configured bound."""

    def __init__(self, candidates: int, bound: int) -> None:
        super().__init__(
            f"search space of {candidates} candidates exceeds bound {bound}"
        )
        self.candidates = candidates
        self.bound = bound


class PreconditionFailed(HomkitError):
    """A documented hypothesis of an operation does not hold."""


class UnknownName(HomkitError):
    """A corpus entry, verb or structure name is not recognized."""


class SchemaError(HomkitError):
    """A serialized file does not match the homkit schema."""
