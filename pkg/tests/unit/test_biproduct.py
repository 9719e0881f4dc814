"""Tests for comodule coalgebras, smash coproducts and Hom-biproducts.

The base is the ground field k with the trivial action and coaction, for
which the biproduct k #σ H4 with the trivial cocycle recovers H4.
"""

import pytest

import corpus
from errors import ConditionsFailed, ShapeMismatch
from exactlin import Tensor3
from models import StructureKind
from structures.biproduct import (
    BIPRODUCT_CONDITIONS,
    ComoduleCoalgebra,
    assemble_bialgebra,
    base_antipode,
    build_biproduct_antipode,
    build_module_biproduct,
    build_smash_coproduct,
    check_admissible_pair,
    check_biproduct_conditions,
    check_comodule_coalgebra,
    check_sigma_antipode,
    check_twisted_comodule_cocycle,
)
from structures.crossed import CocycleMap, WeakAction
from structures.homcore import ground_field, verify


@pytest.fixture
def base(qq):
    return ground_field(qq)


@pytest.fixture
def trivial_data(h4, base):
    """(action, cocycle, coaction) of k over H4, all trivial."""
    return (
        WeakAction.trivial(h4, base),
        CocycleMap.trivial(h4, base),
        ComoduleCoalgebra.trivial(base, h4),
    )


@pytest.mark.unit
class TestComoduleCoalgebras:
    """Tests for comodule coalgebras and the smash coproduct."""

    def test_trivial_coaction(self, h4, base) -> None:
        assert check_comodule_coalgebra(ComoduleCoalgebra.trivial(base, h4)).passed

    def test_smash_coproduct_of_trivial_coaction(self, h4, base) -> None:
        C = build_smash_coproduct(ComoduleCoalgebra.trivial(base, h4))
        assert C.dim == 4
        assert C.comul == h4.comul
        assert verify(StructureKind.COALGEBRA, C).passed

    def test_zero_coaction_rejected(self, h4, base, qq) -> None:
        zero = ComoduleCoalgebra(base, h4, Tensor3.zeros(qq, (1, 4, 1)))
        assert not check_comodule_coalgebra(zero).entry("coaction_counit").passed
        with pytest.raises(ConditionsFailed):
            build_smash_coproduct(zero)


@pytest.mark.unit
class TestBiproductConditions:
    """Tests for the nine bialgebra conditions and the twisted comodule cocycle law."""

    def test_trivial_cocycle_passes_every_condition(self, trivial_data) -> None:
        report = check_biproduct_conditions(*trivial_data)
        assert report.passed, report.failed_axioms
        assert [e.axiom for e in report.entries] == list(BIPRODUCT_CONDITIONS)

    def test_sigma_t_is_not_a_coalgebra_map(self, trivial_data, scalar_sigma_1) -> None:
        action, _, comodule = trivial_data
        report = check_biproduct_conditions(action, scalar_sigma_1.as_cocycle_map(), comodule)
        assert not report.entry("sigma_coalgebra_map").passed

    def test_sigma_t_biproduct_refused(self, trivial_data, scalar_sigma_1) -> None:
        action, _, comodule = trivial_data
        with pytest.raises(ConditionsFailed):
            assemble_bialgebra(action, scalar_sigma_1.as_cocycle_map(), comodule)

    def test_twisted_comodule_cocycle_both_forms(self, trivial_data) -> None:
        _, sigma, comodule = trivial_data
        report = check_twisted_comodule_cocycle(sigma, comodule)
        assert report.passed
        assert "twisted_comodule_cocycle_four_factor" in report

    def test_base_needs_a_coalgebra(self, h4, kaa, action_h4, sigma_1, qq) -> None:
        comodule = ComoduleCoalgebra(kaa, h4, Tensor3.zeros(qq, (2, 4, 2)))
        with pytest.raises(ShapeMismatch):
            check_biproduct_conditions(action_h4, sigma_1, comodule)


@pytest.mark.unit
class TestBiproduct:
    """Tests for the assembled Hom-bialgebra and its antipode."""

    def test_trivial_biproduct_is_h4(self, h4, trivial_data) -> None:
        bp = assemble_bialgebra(*trivial_data)
        assert bp.bialgebra.mul == h4.mul
        assert bp.bialgebra.comul == h4.comul
        assert bp.bialgebra.alpha == h4.alpha

    def test_biproduct_antipode(self, h4, base, trivial_data) -> None:
        bp = assemble_bialgebra(*trivial_data)
        hopf = build_biproduct_antipode(bp, h4.antipode, base_antipode(base))
        assert hopf.antipode == h4.antipode
        report = verify(StructureKind.HOPF, hopf)
        assert report.passed, report.failed_axioms

    def test_antipode_is_a_sigma_antipode_for_trivial_sigma(self, h4, trivial_data) -> None:
        assert check_sigma_antipode(trivial_data[1], h4.antipode).passed

    def test_module_biproduct(self, trivial_data) -> None:
        action, _, comodule = trivial_data
        assert verify(StructureKind.HOPF, build_module_biproduct(action, comodule)).passed
        assert check_admissible_pair(action, comodule).passed

    def test_corpus_ground_field(self) -> None:
        assert base_antipode(corpus.ground()).is_identity()
