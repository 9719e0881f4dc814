"""Tests for weak actions, cocycles and Hom-crossed products.

These tests cover the four crossed-product conditions on the σ_t family,
the carrier multiplication against the printed 8×8 table, smash products,
the derived identities and the Yau twist of classical data.
"""

import pytest

import corpus
from errors import ConditionsFailed, FieldMismatch, NotEndomorphism, PreconditionFailed, ShapeMismatch
from exactlin import FieldSpec, Matrix, Tensor3, vec_scale
from models import StructureKind
from structures.crossed import (
    CocycleMap,
    WeakAction,
    associativity_report,
    build_crossed_product,
    build_smash_product,
    check_module_algebra,
    check_normal,
    crossed_product_conditions,
    twist_algebra,
    twist_cocycle,
    twist_weak_action,
    verify_crossed_identities,
)
from structures.homcore import verify

GF5 = FieldSpec.prime(5)

DISCREPANCIES_NONZERO_T = [
    ("1#x", "1#x"),
    ("1#x", "1#y"),
    ("1#x", "a#x"),
    ("1#y", "1#x"),
    ("1#y", "1#y"),
    ("1#y", "a#x"),
    ("1#y", "a#y"),
    ("a#g", "1#y"),
    ("a#y", "1#1"),
]
DISCREPANCIES_ZERO_T = [("a#g", "1#y"), ("a#y", "1#1")]


def perturbed(cocycle: CocycleMap, i: int, j: int, k: int, delta) -> CocycleMap:
    """σ with ``delta`` added to the coefficient of e_k in σ(e_i, e_j)."""
    fld = cocycle.algebra.field
    old = cocycle.sigma.entry(i, j, k)
    return CocycleMap(cocycle.hopf, cocycle.algebra, cocycle.sigma.with_entry(i, j, k, old + fld.scalar(delta)))


@pytest.mark.unit
class TestConditions:
    """Tests for the weak-action, twisted-module, normality and cocycle checks."""

    @pytest.mark.smoke
    @pytest.mark.parametrize("t", [0, 1, 2])
    def test_sigma_t_satisfies_every_condition(self, t: int) -> None:
        reports = crossed_product_conditions(corpus.action_h4(), corpus.sigma_t(t))
        assert [r.passed for r in reports] == [True, True, True, True]

    def test_condition_reports_are_named(self, action_h4, sigma_1) -> None:
        subjects = [r.subject for r in crossed_product_conditions(action_h4, sigma_1)]
        assert subjects == ["kaa:weak_action", "kaa:twisted_module", "kaa:normal", "kaa:cocycle"]

    def test_action_is_a_module_algebra(self, action_h4) -> None:
        assert check_module_algebra(action_h4).passed

    def test_non_normal_sigma(self, sigma_1) -> None:
        bad = perturbed(sigma_1, 2, 0, 0, 1)
        report = check_normal(bad)
        assert report.failed_axioms[:1] == ["normal_right"]
        assert not report.entry("normal_alpha").passed

    def test_trivial_cocycle_is_its_own_inverse(self, h4, kaa) -> None:
        trivial = CocycleMap.trivial(h4, kaa)
        assert trivial.is_trivial
        assert trivial.inverse.is_trivial

    def test_sigma_t_is_not_trivial(self, sigma_1) -> None:
        assert not sigma_1.is_trivial

    def test_action_shape_checked(self, h4, kaa, qq) -> None:
        with pytest.raises(ShapeMismatch):
            WeakAction(h4, kaa, Tensor3.zeros(qq, (4, 2, 3)))

    def test_fields_must_agree(self, h4, gf3) -> None:
        with pytest.raises(FieldMismatch):
            CocycleMap(h4, corpus.kaa(gf3), Tensor3.zeros(gf3, (4, 4, 2)))


@pytest.mark.unit
class TestCrossedProduct:
    """Tests for the carrier A #σ H."""

    def test_carrier_labels_and_dimension(self, action_h4, sigma_1) -> None:
        cp = build_crossed_product(action_h4, sigma_1)
        assert cp.algebra.dim == 8
        assert cp.algebra.labels[:4] == ("1#1", "1#g", "1#x", "1#y")
        assert cp.index(1, 2) == 6

    @pytest.mark.parametrize("t", [0, 1, 2])
    def test_carrier_is_hom_associative(self, t: int) -> None:
        cp = build_crossed_product(corpus.action_h4(), corpus.sigma_t(t))
        assert associativity_report(cp).passed

    @pytest.mark.parametrize("t", [1, 2, -3])
    def test_x_squared(self, qq, t: int) -> None:
        cp = build_crossed_product(corpus.action_h4(), corpus.sigma_t(t))
        B = cp.algebra
        x = cp.index(0, 2)
        assert B.product(B.e(x), B.e(x)) == vec_scale(qq.scalar(t) * qq.scalar("1/2"), B.unit)

    def test_printed_table_discrepancies(self) -> None:
        assert corpus.crossed_table_discrepancies(1) == DISCREPANCIES_NONZERO_T
        assert corpus.crossed_table_discrepancies(2) == DISCREPANCIES_NONZERO_T

    def test_printed_table_discrepancies_without_deformation(self) -> None:
        assert corpus.crossed_table_discrepancies(0) == DISCREPANCIES_ZERO_T

    def test_enforced_conditions(self, action_h4, sigma_1) -> None:
        with pytest.raises(ConditionsFailed) as exc:
            build_crossed_product(action_h4, perturbed(sigma_1, 0, 0, 0, 1))
        assert any(not r.passed for r in exc.value.reports)

    def test_non_normal_sigma_breaks_unit_law(self, action_h4, sigma_1) -> None:
        cp = build_crossed_product(action_h4, perturbed(sigma_1, 0, 0, 0, 1), enforce=False)
        report = associativity_report(cp)
        assert not report.entry("left_unit").passed

    @pytest.mark.slow
    def test_perturbations_satisfying_conditions_stay_associative(self) -> None:
        action, sigma = corpus.action_h4(GF5), corpus.sigma_t(1, GF5)
        candidates = [
            perturbed(sigma, i, j, k, delta)
            for i in range(4)
            for j in range(4)
            for k in range(2)
            for delta in range(1, 5)
        ]
        candidates += [corpus.sigma_t(t, GF5) for t in GF5.elements()]
        assert len(candidates) >= 100
        passing = 0
        for n, candidate in enumerate(candidates):
            if all(r.passed for r in crossed_product_conditions(action, candidate)):
                passing += 1
                cp = build_crossed_product(action, candidate)
                report = associativity_report(cp)
                assert report.passed, (n, report.failed_axioms)
        assert passing >= 5

    def test_smash_product_is_hom_associative(self, action_h4) -> None:
        cp = build_smash_product(action_h4)
        assert cp.cocycle.is_trivial
        assert verify(StructureKind.ALGEBRA, cp.algebra).passed

    def test_crossed_identities(self, action_h4, sigma_1) -> None:
        report = verify_crossed_identities(action_h4, sigma_1)
        assert report.passed, report.failed_axioms
        assert "hopf_embedding" in report


@pytest.mark.unit
class TestYauTwistOfClassicalData:
    """Tests for twisting a classical weak action and cocycle."""

    def test_twisted_action_matches_h4_action(self, h4, kaa, action_h4) -> None:
        classical = WeakAction(corpus.sweedler(), kaa, action_h4.act)
        A = twist_algebra(kaa, Matrix.identity(kaa.field, 2))
        assert twist_weak_action(classical, h4, A).act == action_h4.act

    def test_twist_algebra_requires_unital_map(self, kaa) -> None:
        with pytest.raises(NotEndomorphism):
            twist_algebra(kaa, Matrix.diagonal(kaa.field, (2, 1)))

    def test_twist_algebra_requires_classical_input(self, h4) -> None:
        with pytest.raises(PreconditionFailed):
            twist_algebra(h4.algebra, Matrix.identity(h4.field, 4))

    def test_sigma_t_survives_the_twist(self, h4, kaa, sigma_1) -> None:
        A = twist_algebra(kaa, Matrix.identity(kaa.field, 2))
        assert twist_cocycle(sigma_1, h4, A).sigma == sigma_1.sigma

    def test_cocycle_must_intertwine(self, h4, kaa, sigma_1) -> None:
        bad = perturbed(sigma_1, 2, 0, 0, 1)
        with pytest.raises(PreconditionFailed):
            twist_cocycle(bad, h4, twist_algebra(kaa, Matrix.identity(kaa.field, 2)))
