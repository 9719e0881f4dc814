"""Tests for canonical JSON documents."""

import json

import pytest

import corpus
from constants import SCHEMA_VERSION
from errors import SchemaError, UnknownName
from serialization import KINDS, dump_file, dumps, from_document, kind_of, load_file, loads, to_document
from structures.biproduct import ComoduleCoalgebra
from structures.homcore import ground_field
from structures.ydmod import check_yd_module


@pytest.mark.unit
class TestCanonicalText:
    """Tests for the byte-level format."""

    def test_sorted_compact_with_newline(self, h4) -> None:
        text = dumps(h4)
        assert text.endswith("}\n")
        assert text.startswith('{"alpha":')
        assert ", " not in text and ": " not in text

    def test_identical_structures_give_identical_text(self) -> None:
        assert dumps(corpus.h4()) == dumps(corpus.h4())

    def test_non_ascii_is_escaped(self) -> None:
        text = dumps(corpus.yd_h4(1))
        assert text.isascii()

    def test_header(self, h4) -> None:
        doc = to_document(h4)
        assert doc["schema"] == SCHEMA_VERSION
        assert doc["kind"] == "hopf"
        assert doc["field"] == "Q"
        assert doc["alpha"][2][2] == "-1"


@pytest.mark.unit
class TestRoundTrips:
    """Tests for reading documents back."""

    def test_hopf_algebra(self, h4) -> None:
        assert loads(dumps(h4)) == h4

    def test_action_embeds_its_spaces(self, action_h4) -> None:
        doc = to_document(action_h4)
        assert doc["hopf"]["kind"] == "hopf"
        assert doc["algebra"]["kind"] == "algebra"
        assert loads(dumps(action_h4)) == action_h4

    def test_scalar_cocycle_over_prime_field(self, gf5) -> None:
        sigma = corpus.scalar_sigma_t(1, gf5)
        loaded = loads(dumps(sigma))
        assert loaded == sigma
        assert to_document(sigma)["form"][2][2] == "3"

    def test_yd_module(self) -> None:
        M = corpus.yd_h4(1)
        loaded = loads(dumps(M))
        assert loaded.labels == M.labels
        assert loaded.base.same_structure(M.base)
        assert check_yd_module(loaded).passed

    def test_comodule_coalgebra(self, h4, qq) -> None:
        comodule = ComoduleCoalgebra.trivial(ground_field(qq), h4)
        assert loads(dumps(comodule)) == comodule

    def test_file_round_trip(self, h4, tmp_path) -> None:
        path = dump_file(h4, tmp_path / "h4.json")
        assert path.read_text(encoding="utf-8") == dumps(h4)
        assert load_file(path) == h4


@pytest.mark.unit
class TestKinds:
    """Tests for kind dispatch."""

    def test_kinds(self, h4, kaa, sigma_1, scalar_sigma_1) -> None:
        assert kind_of(h4) == "hopf"
        assert kind_of(h4.algebra) == "algebra"
        assert kind_of(h4.coalgebra) == "coalgebra"
        assert kind_of(kaa) == "algebra"
        assert kind_of(sigma_1) == "cocycle"
        assert kind_of(scalar_sigma_1) == "scalar_cocycle"

    def test_every_kind_is_readable(self) -> None:
        assert "yd_module" in KINDS
        assert len(KINDS) == 12

    def test_objects_without_a_document(self) -> None:
        with pytest.raises(UnknownName):
            kind_of(object())


@pytest.mark.unit
class TestSchemaErrors:
    """Tests for rejected documents."""

    def test_wrong_schema(self, h4) -> None:
        doc = to_document(h4)
        doc["schema"] = "homkit-schema v0"
        with pytest.raises(SchemaError, match="unsupported schema"):
            from_document(doc)

    def test_unknown_kind(self, h4) -> None:
        doc = to_document(h4)
        doc["kind"] = "quasi_hopf"
        with pytest.raises(SchemaError, match="unknown kind"):
            from_document(doc)

    def test_numeric_scalar(self, kaa) -> None:
        doc = to_document(kaa)
        doc["unit"] = [1, "0"]
        with pytest.raises(SchemaError, match="strings"):
            from_document(doc)

    def test_missing_key(self, kaa) -> None:
        doc = to_document(kaa)
        del doc["mul"]
        with pytest.raises(SchemaError, match="mul"):
            from_document(doc)

    def test_label_count(self, kaa) -> None:
        doc = to_document(kaa)
        doc["labels"] = ["1"]
        with pytest.raises(SchemaError):
            from_document(doc)

    def test_bad_field(self, kaa) -> None:
        doc = to_document(kaa)
        doc["field"] = "gf:4"
        with pytest.raises(SchemaError):
            from_document(doc)

    def test_residue_with_zero_denominator(self, gf3) -> None:
        doc = to_document(corpus.kaa(gf3))
        doc["unit"] = ["1/3", "0"]
        with pytest.raises(SchemaError):
            from_document(doc)

    def test_nested_field_must_agree(self, action_h4, gf3) -> None:
        doc = to_document(action_h4)
        doc["algebra"] = to_document(corpus.kaa(gf3))
        with pytest.raises(SchemaError, match="differs"):
            from_document(doc)

    def test_invalid_json(self) -> None:
        with pytest.raises(SchemaError, match="invalid JSON"):
            loads("{not json")

    def test_not_an_object(self) -> None:
        with pytest.raises(SchemaError):
            from_document(json.loads("[1, 2]"))

    def test_missing_file(self, tmp_path) -> None:
        with pytest.raises(SchemaError, match="cannot read"):
            load_file(tmp_path / "absent.json")
