"""Integration tests for the homkit command line.

These tests run every verb on the worked examples and check exit codes,
the machine-readable record on stdout and the summary on stderr.
"""

import json
import sys

import pytest

sys.path.insert(0, "src")
from serialization import dump_file, load_file, to_document
from structures.biproduct import ComoduleCoalgebra
from structures.crossed import WeakAction
from structures.homcore import ground_field


def _rewrite(path, edit) -> None:
    doc = json.loads(path.read_text(encoding="utf-8"))
    edit(doc)
    path.write_text(json.dumps(doc), encoding="utf-8")


@pytest.mark.integration
class TestCorpusAndVerify:
    """Writing the examples and checking their axioms."""

    @pytest.mark.smoke
    def test_h4_verifies(self, cli, data_dir) -> None:
        result = cli("verify", "--kind", "hopf", data_dir / "h4.json")
        assert result.code == 0
        assert result.record["pass"] is True
        assert result.record["inputs"][0]["path"] == "h4.json"
        assert result.record["inputs"][0]["digest"].startswith("sha256:")
        assert "H4: PASS" in result.stderr

    def test_h4_over_gf3(self, cli, tmp_path) -> None:
        assert cli("corpus", "h4", "--field", "gf:3", "--out", tmp_path).code == 0
        assert cli("verify", "--kind", "hopf", tmp_path / "h4.json").code == 0

    def test_corrupted_structure_fails_with_exit_1(self, cli, data_dir) -> None:
        path = data_dir / "h4.json"

        def square_x_to_one(doc) -> None:
            doc["mul"][2][2] = ["1", "0", "0", "0"]

        _rewrite(path, square_x_to_one)
        result = cli("verify", "--kind", "hopf", path)
        assert result.code == 1
        assert result.record["pass"] is False
        assert "FAIL" in result.stderr

    def test_corpus_record(self, cli, tmp_path) -> None:
        result = cli("corpus", "scalar_sigma_t", "--t", "1/2", "--field", "gf:5", "--out", tmp_path)
        assert result.code == 0
        assert result.record == {
            "corpus": "scalar_sigma_t",
            "field": "gf:5",
            "t": "3",
            "files": ["scalar_sigma_t.json"],
            "notes": [],
        }

    def test_printed_crossed_table(self, cli, tmp_path) -> None:
        result = cli("corpus", "crossed_h4", "--t", "1", "--out", tmp_path)
        assert result.code == 0
        assert result.record["files"] == ["crossed_h4.json", "crossed_h4_printed.json"]
        assert len(result.record["notes"]) == 9
        assert "printed table differs at (a#y, 1#1)" in result.record["notes"]

    def test_corpus_files_are_byte_identical(self, cli, tmp_path) -> None:
        first, second = tmp_path / "a", tmp_path / "b"
        cli("corpus", "yd_h4", "--out", first)
        cli("corpus", "yd_h4", "--out", second)
        assert (first / "yd_h4.json").read_bytes() == (second / "yd_h4.json").read_bytes()


@pytest.mark.integration
class TestConstruct:
    """Building derived structures from documents."""

    def test_crossed_product_and_table(self, cli, data_dir) -> None:
        out = data_dir / "cp.json"
        result = cli(
            "construct", "crossed", "--action", data_dir / "action_h4.json",
            "--cocycle", data_dir / "sigma_t.json", "--out", out,
        )
        assert result.code == 0, result.stderr
        assert result.record["notes"] == ["wrote algebra cp.json"]
        assert load_file(out).dim == 8
        table = cli("report", "table", out, "--format", "md")
        assert table.code == 0
        assert table.stdout.startswith("| · | 1#1 | 1#g | 1#x | 1#y | a#1 |")

    def test_crossed_product_with_base_and_hopf(self, cli, data_dir) -> None:
        cli("corpus", "kaa", "--out", data_dir)
        out = data_dir / "cp.json"
        result = cli(
            "construct", "crossed", "--base", data_dir / "kaa.json", "--hopf", data_dir / "h4.json",
            "--action", data_dir / "action_h4.json", "--cocycle", data_dir / "sigma_t.json", "--out", out,
        )
        assert result.code == 0, result.stderr
        assert load_file(out).dim == 8
        assert cli("report", "table", out, "--format", "md").stdout.count("\n") == 10

    def test_base_must_match_the_action(self, cli, data_dir) -> None:
        result = cli(
            "construct", "crossed", "--base", data_dir / "h4.json",
            "--action", data_dir / "action_h4.json", "--cocycle", data_dir / "sigma_t.json",
            "--out", data_dir / "cp.json",
        )
        assert result.code == 2
        assert "--base" in result.stderr
        assert not (data_dir / "cp.json").exists()

    def test_hopf_must_match_the_action(self, cli, data_dir) -> None:
        cli("corpus", "sweedler", "--out", data_dir)
        result = cli(
            "construct", "smash", "--hopf", data_dir / "sweedler.json",
            "--action", data_dir / "action_h4.json", "--out", data_dir / "sm.json",
        )
        assert result.code == 2
        assert "--hopf" in result.stderr

    def test_construct_is_deterministic(self, cli, data_dir) -> None:
        out = data_dir / "cp.json"
        args = ("construct", "crossed", "--action", data_dir / "action_h4.json",
                "--cocycle", data_dir / "sigma_t.json", "--out", out)
        first = cli(*args)
        first_bytes = out.read_bytes()
        second = cli(*args)
        assert first.stdout == second.stdout
        assert out.read_bytes() == first_bytes

    def test_failed_conditions_exit_1(self, cli, data_dir) -> None:
        sigma = data_dir / "sigma_t.json"

        def double_unit_value(doc) -> None:
            doc["sigma"][0][0] = ["2", "0"]

        _rewrite(sigma, double_unit_value)
        result = cli(
            "construct", "crossed", "--action", data_dir / "action_h4.json",
            "--cocycle", sigma, "--out", data_dir / "cp.json",
        )
        assert result.code == 1
        assert result.record["pass"] is False
        assert not (data_dir / "cp.json").exists()

    def test_two_sided_deformation(self, cli, data_dir) -> None:
        out = data_dir / "deformed.json"
        result = cli("construct", "deform", "--sigma", data_dir / "scalar_sigma_t.json", "--out", out)
        assert result.code == 0, result.stderr
        assert load_file(out).name == "H4(sigma_1)"

    @pytest.mark.parametrize("variant", ["S1", "S2"])
    def test_dual_yd_module(self, cli, data_dir, variant: str) -> None:
        out = data_dir / "dual.json"
        result = cli(
            "construct", "dual-yd", "--module", data_dir / "yd_h4.json",
            "--sigma", data_dir / "scalar_sigma_t.json", "--variant", variant, "--out", out,
        )
        assert result.code == 0, result.stderr
        assert to_document(load_file(out))["kind"] == "yd_module"

    def test_biproduct_over_ground_field(self, cli, tmp_path, h4, qq) -> None:
        k = ground_field(qq)
        action = dump_file(WeakAction.trivial(h4, k), tmp_path / "action.json")
        comodule = dump_file(ComoduleCoalgebra.trivial(k, h4), tmp_path / "comodule.json")
        out = tmp_path / "bp.json"
        result = cli("construct", "biproduct", "--action", action, "--comodule", comodule, "--out", out)
        assert result.code == 0, result.stderr
        bp = load_file(out)
        assert bp.mul == h4.mul
        assert bp.antipode == h4.antipode
        assert cli("verify", "--kind", "hopf", out).code == 0


@pytest.mark.integration
class TestCheck:
    """Condition families on the worked examples."""

    def test_crossed_product_conditions(self, cli, data_dir) -> None:
        result = cli("check", "cocycle", "--action", data_dir / "action_h4.json",
                     "--cocycle", data_dir / "sigma_t.json")
        assert result.code == 0
        assert [r["subject"] for r in result.record["reports"]] == [
            "kaa:weak_action", "kaa:twisted_module", "kaa:normal", "kaa:cocycle",
        ]

    @pytest.mark.parametrize("what", ["crossed-identities", "cleft"])
    def test_crossed_product_families(self, cli, data_dir, what: str) -> None:
        result = cli("check", what, "--action", data_dir / "action_h4.json",
                     "--cocycle", data_dir / "sigma_t.json")
        assert result.code == 0, result.stderr

    @pytest.mark.parametrize("what", ["lazy", "antipode-identities", "twisted-antipodes"])
    def test_scalar_cocycle_families(self, cli, data_dir, what: str) -> None:
        result = cli("check", what, "--sigma", data_dir / "scalar_sigma_t.json")
        assert result.code == 0, result.stderr

    def test_yd_module(self, cli, data_dir) -> None:
        result = cli("check", "yd", "--module", data_dir / "yd_h4.json")
        assert result.code == 0, result.stderr
        assert "yd_compatibility" in result.stderr

    @pytest.mark.parametrize(
        ("alias", "flags"),
        [("lemma25", ("--action", "action_h4.json", "--cocycle", "sigma_t.json")), ("lemma46", ("--sigma", "scalar_sigma_t.json"))],
    )
    def test_short_verb_names(self, cli, data_dir, alias: str, flags: tuple[str, ...]) -> None:
        args = [data_dir / f if f.endswith(".json") else f for f in flags]
        result = cli("check", alias, *args)
        assert result.code == 0, result.stderr
        full = {"lemma25": "crossed-identities", "lemma46": "antipode-identities"}[alias]
        assert result.record == cli("check", full, *args).record


@pytest.mark.integration
class TestSearch:
    """Exhaustive enumeration over prime fields."""

    def test_search_lazy_on_group_algebra(self, cli) -> None:
        result = cli("search", "lazy", "--corpus", "kc2", "--field", "gf:3")
        assert result.code == 0
        assert result.record["candidates"] == 3
        assert result.record["count"] == 2
        assert result.record["cocycles"][0] == [["1", "1"], ["1", "1"]]

    def test_cohomology_of_group_algebra(self, cli) -> None:
        result = cli("cohomology", "lazy", "--corpus", "kc2", "--field", "gf:5")
        assert result.code == 0
        record = result.record
        assert [c["size"] for c in record["classes"]] == [2, 2]
        assert record["group_table"] == [[0, 1], [1, 0]]
        assert record["report"]["pass"] is True

    def test_search_needs_a_hopf_algebra(self, cli) -> None:
        assert cli("search", "lazy", "--corpus", "kaa", "--field", "gf:3").code == 2


@pytest.mark.integration
class TestUsageErrors:
    """Input and usage errors exit with 2."""

    def test_unreadable_document(self, cli, tmp_path) -> None:
        bad = tmp_path / "bad.json"
        bad.write_text("{}", encoding="utf-8")
        result = cli("verify", "--kind", "hopf", bad)
        assert result.code == 2
        assert "unsupported schema" in result.stderr

    def test_document_of_the_wrong_kind(self, cli, data_dir) -> None:
        result = cli("check", "cocycle", "--action", data_dir / "h4.json", "--cocycle", data_dir / "sigma_t.json")
        assert result.code == 2

    def test_missing_flag(self, cli, data_dir) -> None:
        result = cli("construct", "crossed", "--action", data_dir / "action_h4.json", "--out", data_dir / "x.json")
        assert result.code == 2
        assert "--cocycle" in result.stderr

    def test_unknown_verb(self, cli) -> None:
        assert cli("simplify").code == 2

    def test_bad_parameter(self, cli, tmp_path) -> None:
        assert cli("corpus", "sigma_t", "--t", "1/0", "--out", tmp_path).code == 2

    def test_invalid_environment(self, cli, monkeypatch) -> None:
        monkeypatch.setenv("HOMKIT_THREADS", "0")
        result = cli("corpus", "h4", "--out", ".")
        assert result.code == 2
        assert "HOMKIT_THREADS" in result.stderr

    def test_version(self, cli) -> None:
        result = cli("--version")
        assert result.code == 0
        assert result.stdout.strip() == "homkit 1.0.0"
