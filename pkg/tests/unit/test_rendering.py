"""Tests for tables, report summaries and run records."""

import hashlib

import pytest

from constants import SCHEMA_VERSION
from errors import UnknownName
from models import Report, ReportEntry, Witness
from rendering import digest, format_vector, render_report, render_table, run_report


@pytest.mark.unit
class TestFormatVector:
    """Tests for linear-combination formatting."""

    def test_mixed_coefficients(self, qq) -> None:
        v = (qq.zero, qq.scalar("-1/2"), qq.one, qq.zero)
        assert format_vector(qq, v, ("1", "g", "x", "y")) == "-1/2*g+x"

    def test_zero_vector(self, qq) -> None:
        assert format_vector(qq, (qq.zero, qq.zero), ("1", "a")) == "0"

    def test_residues_are_nonnegative(self, gf5) -> None:
        assert format_vector(gf5, (gf5.scalar(-1),), ("a",)) == "4*a"


@pytest.mark.unit
class TestTables:
    """Tests for multiplication tables."""

    def test_markdown(self, kaa) -> None:
        assert render_table(kaa, "md") == (
            "| · | 1 | a |\n"
            "|---|---|---|\n"
            "| 1 | 1 | a |\n"
            "| a | a | 0 |\n"
        )

    def test_csv(self, kaa) -> None:
        assert render_table(kaa, "csv") == "·,1,a\n1,1,a\na,a,0\n"

    def test_h4_row_of_x(self, h4) -> None:
        row = render_table(h4, "md").splitlines()[4]
        assert row == "| x | -x | y | 0 | 0 |"

    def test_unknown_format(self, kaa) -> None:
        with pytest.raises(UnknownName):
            render_table(kaa, "latex")


@pytest.mark.unit
class TestReports:
    """Tests for the human summary and the machine record."""

    @pytest.fixture
    def report(self) -> Report:
        return Report(
            "H4",
            (
                ReportEntry("hom_associativity", True),
                ReportEntry("hom_coassociativity", False, (Witness((1, 2), ("3",)),), 2),
            ),
            ("checked over Q",),
        )

    def test_render_report(self, report: Report) -> None:
        assert render_report(report) == (
            "H4: FAIL (1 of 2)\n"
            "  ok     hom_associativity\n"
            "  FAILED hom_coassociativity [2 witnesses] first at [1, 2]\n"
            "  note: checked over Q\n"
        )

    def test_render_verdict(self) -> None:
        report = Report("gamma", (ReportEntry.verdict("gamma_invertible", False, "singular"),))
        assert "[1 witness] singular" in render_report(report)

    def test_render_pass(self) -> None:
        assert render_report(Report("k", (ReportEntry("unit", True),))).startswith("k: PASS\n")

    def test_digest(self, tmp_path) -> None:
        path = tmp_path / "doc.json"
        path.write_bytes(b"{}\n")
        assert digest(path) == "sha256:" + hashlib.sha256(b"{}\n").hexdigest()

    def test_run_report(self, report: Report, tmp_path) -> None:
        path = tmp_path / "h4.json"
        path.write_bytes(b"{}\n")
        record = run_report("verify", [report], [path], ["note"])
        assert record["schema"] == SCHEMA_VERSION
        assert record["tool"] == "homkit 1.0.0"
        assert record["verb"] == "verify"
        assert record["pass"] is False
        assert record["inputs"] == [{"path": "h4.json", "digest": digest(path)}]
        assert record["reports"][0]["entries"][1]["witness_count"] == 2
        assert record["notes"] == ["note"]
