"""Data models shared across homkit.

This module contains the small, structure-independent types:
- FieldKind, StructureKind, Side, DualVariant, InvertibilityFailure: enums
- Witness, ReportEntry, Report: the named-axiom check record
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class FieldKind(str, Enum):
    """Ground field of a structure."""

    RATIONALS = "rationals"
    """The rational numbers, arbitrary precision."""

    PRIME = "prime"
    """A prime field GF(p)."""


class StructureKind(str, Enum):
    """Which axiom family ``verify`` checks."""

    ALGEBRA = "algebra"
    COALGEBRA = "coalgebra"
    BIALGEBRA = "bialgebra"
    HOPF = "hopf"


class Side(str, Enum):
    """Side of a cocycle deformation.

    Examples
    --------
    >>> Side("two_sided") is Side.TWO_SIDED
    True
    """

    LEFT = "left"
    """h ·σ g = σ(h1, g1) α⁻¹(h2 g2)."""

    RIGHT = "right"
    """h σ· g = α⁻¹(h1 g1) σ(h2, g2)."""

    TWO_SIDED = "two_sided"
    """Both deformations, required to coincide (lazy cocycles)."""


class DualVariant(str, Enum):
    """Which antipode twist the dual of a Yetter-Drinfeld module uses."""

    S1 = "S1"
    S2 = "S2"


class InvertibilityFailure(str, Enum):
    """Why a convolution inverse was rejected."""

    ONE_SIDED = "one_sided"
    """A right inverse exists but is not a left inverse."""

    NONE = "none"
    """No right inverse exists."""


@dataclass(frozen=True)
class Witness:
    """A basis multi-index where a residual is nonzero, with the residual."""

    indices: tuple[int, ...]
    residual: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"indices": list(self.indices), "residual": list(self.residual)}


@dataclass(frozen=True)
class ReportEntry:
    """Outcome of one named axiom.

    ``passed`` is true exactly when no witness was found. ``witness_count``
    counts every failing multi-index even when only the first few are kept.
    """

    axiom: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    witness_count: int = 0

    @classmethod
    def from_witnesses(
        cls, axiom: str, witnesses: Iterable[Witness], *, keep: int
    ) -> ReportEntry:
        kept: list[Witness] = []
        count = 0
        for w in witnesses:
            count += 1
            if len(kept) < keep:
                kept.append(w)
        return cls(axiom, count == 0, tuple(kept), count)

    @classmethod
    def verdict(cls, axiom: str, ok: bool, detail: str = "") -> ReportEntry:
        """Entry for a yes/no check that has no residual tensor."""
        if ok:
            return cls(axiom, True)
        return cls(axiom, False, (Witness((), (detail,) if detail else ()),), 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "axiom": self.axiom,
            "pass": self.passed,
            "witness_count": self.witness_count,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class Report:
    """Ordered collection of named-axiom outcomes plus free-form notes."""

    subject: str
    entries: tuple[ReportEntry, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failed_axioms(self) -> list[str]:
        return [e.axiom for e in self.entries if not e.passed]

    def entry(self, axiom: str) -> ReportEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def __contains__(self, axiom: object) -> bool:
        return any(e.axiom == axiom for e in self.entries)

    def with_entries(self, *entries: ReportEntry) -> Report:
        return Report(self.subject, self.entries + entries, self.notes)

    def with_notes(self, *notes: str) -> Report:
        return Report(self.subject, self.entries, self.notes + notes)

    def merged(self, *others: Report, prefix: bool = False) -> Report:
        """Concatenate entries of ``others`` after this report's entries.

        With ``prefix`` the merged axiom names are qualified by the subject of
        the report they came from.
        """
        entries = list(self.entries)
        notes = list(self.notes)
        for other in others:
            for e in other.entries:
                if prefix:
                    e = ReportEntry(
                        f"{other.subject}.{e.axiom}",
                        e.passed,
                        e.witnesses,
                        e.witness_count,
                    )
                entries.append(e)
            notes.extend(other.notes)
        return Report(self.subject, tuple(entries), tuple(notes))

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "pass": self.passed,
            "entries": [e.to_dict() for e in self.entries],
            "notes": list(self.notes),
        }
