"""Tests for bicomodule algebras, B ⋉ A and Yetter-Drinfeld modules over H(σ)."""

import pytest

import corpus
from errors import PreconditionFailed, ShapeMismatch
from exactlin import Matrix, Tensor3
from models import DualVariant, StructureKind
from structures.biproduct import ComoduleCoalgebra
from structures.cleft import LeftComoduleAlgebra
from structures.crossed import WeakAction
from structures.homcore import ground_field, verify
from structures.lazy import ScalarCocycle
from structures.ydmod import (
    BicomoduleAlgebra,
    build_b_ltimes_a,
    build_dual_yd,
    build_rho_bar,
    build_sigma_tilde,
    check_bicomodule_algebra,
    check_yd_module,
    deformation_bicomodule,
    diagonal_crossed_product,
    find_yd_isomorphism,
)


@pytest.fixture
def module():
    """The two-dimensional YD module over H4(σ_1)."""
    return corpus.yd_h4(1)


@pytest.fixture
def admissible(h4, qq):
    """k with trivial action and coaction, an admissible pair over H4."""
    k = ground_field(qq)
    return WeakAction.trivial(h4, k), ComoduleCoalgebra.trivial(k, h4)


@pytest.mark.unit
class TestBicomoduleAlgebras:
    """Tests for bicomodule algebras and H(σ)."""

    def test_deformation_is_a_bicomodule_algebra(self, scalar_sigma_1) -> None:
        A = deformation_bicomodule(scalar_sigma_1)
        assert A.is_deformation
        report = check_bicomodule_algebra(A)
        assert report.passed, report.failed_axioms

    def test_trivial_coactions(self, h4, kaa) -> None:
        A = BicomoduleAlgebra.trivial(kaa, h4)
        assert not A.is_deformation
        assert check_bicomodule_algebra(A).passed

    def test_coaction_shapes_checked(self, h4, kaa) -> None:
        with pytest.raises(ShapeMismatch):
            BicomoduleAlgebra(kaa, h4, h4.comul, h4.comul)


@pytest.mark.unit
class TestLtimes:
    """Tests for B ⋉ A, its coaction over the biproduct and σ̃."""

    def test_ltimes_with_regular_coaction(self, h4, action_h4) -> None:
        product = build_b_ltimes_a(action_h4, LeftComoduleAlgebra(h4, h4, h4.comul))
        assert product.dim == 8
        assert product.labels[0] == "1⋉1"
        assert verify(StructureKind.ALGEBRA, product).passed

    def test_ground_field_ltimes_h4_is_h4(self, h4, admissible) -> None:
        action, _ = admissible
        product = build_b_ltimes_a(action, LeftComoduleAlgebra(h4, h4, h4.comul))
        assert product.mul == h4.mul

    def test_rho_bar_over_biproduct(self, h4, admissible) -> None:
        action, b_comodule = admissible
        rho_bar = build_rho_bar(action, b_comodule, LeftComoduleAlgebra(h4, h4, h4.comul))
        assert rho_bar.report.passed, rho_bar.report.failed_axioms
        assert rho_bar.coaction.lam == h4.comul

    def test_rho_bar_needs_admissible_pair(self, h4, admissible, qq) -> None:
        action, _ = admissible
        zero = ComoduleCoalgebra(action.algebra, h4, Tensor3.zeros(qq, (1, 4, 1)))
        with pytest.raises(PreconditionFailed):
            build_rho_bar(action, zero, LeftComoduleAlgebra(h4, h4, h4.comul))

    def test_sigma_tilde(self, admissible, scalar_sigma_1) -> None:
        tilde = build_sigma_tilde(*admissible, scalar_sigma_1)
        assert tilde.report.passed, tilde.report.failed_axioms
        assert tilde.cocycle.form == scalar_sigma_1.form


@pytest.mark.unit
class TestYDModules:
    """Tests for the YD module laws, duals and isomorphisms."""

    @pytest.mark.smoke
    def test_corpus_module(self, module) -> None:
        report = check_yd_module(module)
        assert report.passed, report.failed_axioms
        assert "yd_solved_form" in report
        assert report.entry("solved_form_equivalent").passed

    def test_broken_coaction_fails(self, module) -> None:
        broken = type(module)(
            module.base,
            module.labels,
            module.mu,
            module.action,
            module.coaction.with_entry(0, 0, 0, module.mu.field.zero),
            name="broken",
        )
        report = check_yd_module(broken)
        assert not report.entry("coaction_counit").passed

    @pytest.mark.parametrize("variant", list(DualVariant))
    def test_duals_are_yd_modules(self, module, scalar_sigma_1, variant: DualVariant) -> None:
        dual = build_dual_yd(module, scalar_sigma_1, variant)
        assert dual.labels == ("m1*", "m2*")
        assert dual.name == f"M*{variant.value}"
        report = check_yd_module(dual)
        assert report.passed, report.failed_axioms

    def test_s1_dual_action_of_x(self, module, scalar_sigma_1, qq) -> None:
        dual = build_dual_yd(module, scalar_sigma_1, DualVariant.S1)
        x = dual.base.hopf.e(2)
        assert dual.action_matrix(x) == Matrix.from_rows(qq, [[0, 1], ["1/2", 0]])

    def test_dual_needs_matching_deformation(self, module) -> None:
        with pytest.raises(PreconditionFailed):
            build_dual_yd(module, corpus.scalar_sigma_t(2), DualVariant.S1)

    def test_double_dual_is_isomorphic(self, module, scalar_sigma_1) -> None:
        dual = build_dual_yd(module, scalar_sigma_1, DualVariant.S1)
        double = build_dual_yd(dual, scalar_sigma_1.inverse, DualVariant.S1)
        T = find_yd_isomorphism(module, double)
        assert T is not None
        assert T.rank() == 2

    def test_module_is_isomorphic_to_itself(self, module) -> None:
        assert find_yd_isomorphism(module, module) is not None


@pytest.mark.unit
@pytest.mark.slow
class TestDiagonalCrossedProduct:
    """Tests for H* ⋈ A."""

    def test_carrier_and_report(self, h4) -> None:
        result = diagonal_crossed_product(deformation_bicomodule(ScalarCocycle.trivial(h4)))
        assert result.algebra.dim == 16
        assert "hom_associativity" in result.report
        assert result.dual.alpha == h4.alpha.transpose()
