"""Library entry point: ``import homkit`` for the public API in one namespace."""

from constants import TOOL_VERSION
from corpus import corpus, crossed_table_discrepancies
from errors import (
    ConditionsFailed,
    FieldMismatch,
    FieldTooLarge,
    HomkitError,
    InvalidField,
    NoSolution,
    NotInvertible,
    PreconditionFailed,
    SchemaError,
    ShapeMismatch,
    Singular,
    UnknownName,
)
from exactlin import FieldSpec, Matrix, Tensor3
from models import DualVariant, Report, ReportEntry, Side, StructureKind
from rendering import render_report, render_table
from serialization import dumps, from_document, load_file, loads, to_document
from structures import *  # noqa: F403
from structures import __all__ as _structures_all

__version__ = TOOL_VERSION

__all__ = [
    "ConditionsFailed",
    "DualVariant",
    "FieldMismatch",
    "FieldSpec",
    "FieldTooLarge",
    "HomkitError",
    "InvalidField",
    "Matrix",
    "NoSolution",
    "NotInvertible",
    "PreconditionFailed",
    "Report",
    "ReportEntry",
    "SchemaError",
    "ShapeMismatch",
    "Side",
    "Singular",
    "StructureKind",
    "Tensor3",
    "UnknownName",
    "corpus",
    "crossed_table_discrepancies",
    "dumps",
    "from_document",
    "load_file",
    "loads",
    "render_report",
    "render_table",
    "to_document",
    *_structures_all,
]
