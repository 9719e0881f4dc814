"""Tests for the report records and enums."""

import pytest

from models import DualVariant, Report, ReportEntry, Side, Witness


def witnesses(n: int):
    return (Witness((i,), (str(i),)) for i in range(n))


@pytest.mark.unit
class TestReportEntry:
    """Tests for named-axiom outcomes."""

    def test_counts_every_witness(self) -> None:
        entry = ReportEntry.from_witnesses("left_unit", witnesses(5), keep=2)
        assert not entry.passed
        assert entry.witness_count == 5
        assert [w.indices for w in entry.witnesses] == [(0,), (1,)]

    def test_no_witness_passes(self) -> None:
        entry = ReportEntry.from_witnesses("left_unit", witnesses(0), keep=2)
        assert entry.passed
        assert entry.witness_count == 0

    def test_verdicts(self) -> None:
        assert ReportEntry.verdict("gamma_unit", True) == ReportEntry("gamma_unit", True)
        failed = ReportEntry.verdict("gamma_unit", False, "γ(1) = 2")
        assert failed.witnesses[0].residual == ("γ(1) = 2",)
        assert failed.witness_count == 1

    def test_to_dict(self) -> None:
        entry = ReportEntry("cocycle", False, (Witness((0, 1), ("1/2",)),), 1)
        assert entry.to_dict() == {
            "axiom": "cocycle",
            "pass": False,
            "witness_count": 1,
            "witnesses": [{"indices": [0, 1], "residual": ["1/2"]}],
        }


@pytest.mark.unit
class TestReport:
    """Tests for report composition."""

    @pytest.fixture
    def report(self) -> Report:
        return Report("kaa:normal", (ReportEntry("normal_right", True), ReportEntry("normal_left", False)))

    def test_verdict_and_lookup(self, report: Report) -> None:
        assert not report.passed
        assert report.failed_axioms == ["normal_left"]
        assert "normal_right" in report
        assert "normal_alpha" not in report
        with pytest.raises(KeyError):
            report.entry("normal_alpha")

    def test_empty_report_passes(self) -> None:
        assert Report("nothing").passed

    def test_with_entries_and_notes_copy(self, report: Report) -> None:
        extended = report.with_entries(ReportEntry("normal_alpha", True)).with_notes("extra")
        assert len(report.entries) == 2
        assert len(extended.entries) == 3
        assert extended.notes == ("extra",)

    def test_merged_with_prefix(self, report: Report) -> None:
        other = Report("kaa:cocycle", (ReportEntry("cocycle", True),), ("n",))
        merged = Report("all").merged(report, other, prefix=True)
        assert [e.axiom for e in merged.entries] == [
            "kaa:normal.normal_right",
            "kaa:normal.normal_left",
            "kaa:cocycle.cocycle",
        ]
        assert merged.notes == ("n",)
        assert merged.subject == "all"

    def test_merged_without_prefix(self, report: Report) -> None:
        assert report.merged(report).failed_axioms == ["normal_left", "normal_left"]

    def test_to_dict(self, report: Report) -> None:
        doc = report.to_dict()
        assert doc["subject"] == "kaa:normal"
        assert doc["pass"] is False
        assert len(doc["entries"]) == 2


@pytest.mark.unit
class TestEnums:
    """Tests for CLI-facing enum values."""

    def test_values(self) -> None:
        assert Side("two_sided") is Side.TWO_SIDED
        assert DualVariant("S2") is DualVariant.S2
        assert [s.value for s in Side] == ["left", "right", "two_sided"]
