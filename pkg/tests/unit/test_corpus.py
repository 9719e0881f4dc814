"""Tests for the worked-example registry."""

import pytest

import corpus
from errors import UnknownName
from exactlin import FieldSpec
from models import StructureKind
from structures.crossed import CrossedProduct, check_cocycle
from structures.homcore import verify
from structures.ydmod import YDModule


@pytest.mark.unit
class TestRegistry:
    """Tests for name lookup."""

    def test_known_entries(self) -> None:
        assert set(corpus.CORPUS) == {
            "h4",
            "sweedler",
            "kaa",
            "kaa_hopf",
            "action_h4",
            "sigma_t",
            "scalar_sigma_t",
            "crossed_h4",
            "kc2",
            "ground",
            "yd_h4",
        }

    def test_unknown_entry(self) -> None:
        with pytest.raises(UnknownName) as exc_info:
            corpus.corpus("sweedler8")
        assert "sweedler8" in str(exc_info.value)

    def test_field_is_passed_through(self, gf3) -> None:
        assert corpus.corpus("h4", field=gf3).field == gf3

    def test_default_field_is_rationals(self) -> None:
        assert corpus.corpus("kaa").field == FieldSpec.rationals()

    def test_crossed_entry(self) -> None:
        cp = corpus.corpus("crossed_h4", t=2)
        assert isinstance(cp, CrossedProduct)
        assert cp.algebra.dim == 8

    def test_yd_entry(self, gf5) -> None:
        M = corpus.corpus("yd_h4", t=1, field=gf5)
        assert isinstance(M, YDModule)
        assert M.labels == ("m1", "m2")


@pytest.mark.unit
class TestEntries:
    """Tests for the individual examples."""

    def test_kaa_hopf(self) -> None:
        assert verify(StructureKind.HOPF, corpus.kaa_hopf()).passed

    def test_ground_field(self) -> None:
        k = corpus.ground()
        assert k.dim == 1
        assert verify(StructureKind.HOPF, k).passed

    def test_scalar_sigma_names(self) -> None:
        assert corpus.scalar_sigma_t(1).name == "sigma_1"
        assert corpus.scalar_sigma_t("1/2").name == "sigma_1/2"

    def test_sigma_t_over_prime_field(self, gf5) -> None:
        sigma = corpus.sigma_t(2, gf5)
        assert sigma.sigma.entry(2, 2, 0) == gf5.one
        assert check_cocycle(corpus.action_h4(gf5), sigma).passed

    def test_printed_table_shape(self) -> None:
        assert corpus.crossed_h4_printed(1).dims == (8, 8, 8)

    def test_h4_alpha_is_an_involution(self, h4) -> None:
        assert (h4.alpha @ h4.alpha).is_identity()
