"""Human-readable tables and run reports.

- ``render_table``: multiplication table of an algebra as Markdown or CSV
- ``render_report``: one-line-per-axiom summary for stderr
- ``run_report``: the machine-readable record printed by the CLI
"""

from __future__ import annotations

import csv
import hashlib
import io
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from constants import SCHEMA_VERSION, TOOL_NAME, TOOL_VERSION
from errors import UnknownName
from exactlin import FieldSpec, Vector
from models import Report
from structures.homcore import AnyAlgebra

__all__ = ["digest", "format_vector", "render_report", "render_table", "run_report"]

TABLE_FORMATS = ("md", "csv")


def format_vector(fld: FieldSpec, v: Vector, labels: Sequence[str]) -> str:
    """Linear combination such as ``-1/2*a#1+y``; ``"0"`` for the zero vector."""
    parts: list[str] = []
    for x, label in zip(v, labels):
        if not x:
            continue
        f = fld.to_fraction(x)
        sign = "-" if f < 0 else "+"
        mag = abs(f)
        coeff = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign}{coeff}{label}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def render_table(algebra: AnyAlgebra, fmt: str = "md") -> str:
    """Multiplication table, rows times columns.

    Raises:
        UnknownName: ``fmt`` is not ``md`` or ``csv``.
    """
    if fmt not in TABLE_FORMATS:
        raise UnknownName(f"unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")
    labels = list(algebra.labels)
    n = algebra.dim
    rows = [
        [labels[i]] + [format_vector(algebra.field, algebra.mul.fiber(i, j), labels) for j in range(n)]
        for i in range(n)
    ]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["·"] + labels)
        writer.writerows(rows)
        return buf.getvalue()
    lines = [
        "| · | " + " | ".join(labels) + " |",
        "|" + "---|" * (n + 1),
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def render_report(report: Report) -> str:
    """Summary for humans: verdict line, one line per axiom, then notes."""
    failed = report.failed_axioms
    verdict = "PASS" if report.passed else f"FAIL ({len(failed)} of {len(report.entries)})"
    lines = [f"{report.subject}: {verdict}"]
    for e in report.entries:
        mark = "ok" if e.passed else "FAILED"
        line = f"  {mark:6} {e.axiom}"
        if not e.passed:
            line += f" [{e.witness_count} witness{'es' if e.witness_count != 1 else ''}]"
            if e.witnesses and e.witnesses[0].indices:
                line += f" first at {list(e.witnesses[0].indices)}"
            elif e.witnesses and e.witnesses[0].residual:
                line += f" {e.witnesses[0].residual[0]}"
        lines.append(line)
    lines.extend(f"  note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def run_report(
    verb: str, reports: Sequence[Report], inputs: Sequence[str | Path] = (), notes: Sequence[str] = ()
) -> dict[str, Any]:
    """Machine-readable record of one CLI run; deterministic for identical inputs."""
    return {
        "schema": SCHEMA_VERSION,
        "tool": f"{TOOL_NAME} {TOOL_VERSION}",
        "verb": verb,
        "inputs": [{"path": Path(p).name, "digest": digest(p)} for p in inputs],
        "pass": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
        "notes": list(notes),
    }
