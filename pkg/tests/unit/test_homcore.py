"""Tests for Hom-algebras, Hom-coalgebras and Hom-Hopf algebras.

These tests verify the axiom checks on H4 and its classical form, the Yau
twist, duals, tensor constructions and convolution inverses.
"""

import itertools
import logging

import pytest

import corpus
from errors import NotEndomorphism, NotInvertible, PreconditionFailed, ShapeMismatch, Singular
from exactlin import FieldSpec, Matrix
from models import InvertibilityFailure, StructureKind
from structures.homcore import (
    SPLIT_LEFT,
    SPLIT_RIGHT,
    HomHopfAlgebra,
    LinMap,
    conv_invert,
    convolution_unit,
    convolve,
    dual,
    ground_field,
    is_conv_invertible,
    tensor_algebra,
    tensor_coalgebra,
    verify,
    yau_twist,
)

H4_ALPHA = (1, 1, -1, -1)


@pytest.mark.unit
class TestVerify:
    """Tests for the named-axiom verification."""

    @pytest.mark.smoke
    @pytest.mark.parametrize("field", [FieldSpec.rationals(), FieldSpec.prime(3), FieldSpec.prime(5)])
    def test_h4_is_a_hom_hopf_algebra(self, field: FieldSpec) -> None:
        report = verify(StructureKind.HOPF, corpus.h4(field))
        assert report.passed, report.failed_axioms
        assert report.subject == "H4:hopf"

    def test_report_lists_every_family(self, h4) -> None:
        report = verify("hopf", h4)
        for axiom in ("hom_associativity", "hom_coassociativity", "comul_multiplicative", "antipode_left"):
            assert axiom in report

    def test_classical_sweedler_algebra(self) -> None:
        assert verify(StructureKind.HOPF, corpus.sweedler()).passed

    def test_group_algebra_and_ground_field(self) -> None:
        assert verify(StructureKind.HOPF, corpus.kc2(FieldSpec.prime(5))).passed
        assert verify(StructureKind.HOPF, ground_field(FieldSpec.rationals())).passed

    def test_algebra_only(self, kaa) -> None:
        assert verify(StructureKind.ALGEBRA, kaa).passed

    def test_algebra_cannot_be_verified_as_hopf(self, kaa) -> None:
        with pytest.raises(ShapeMismatch):
            verify(StructureKind.HOPF, kaa)

    def test_corrupted_multiplication_reports_witness(self, h4) -> None:
        bad = h4.with_algebra(h4.mul.with_entry(2, 2, 0, h4.field.one), "bad")
        report = verify(StructureKind.HOPF, bad)
        assert not report.passed
        entry = report.entry("hom_associativity")
        assert entry.witness_count > 0
        assert entry.witnesses[0].indices

    def test_failures_are_logged(self, h4, caplog) -> None:
        bad = h4.with_algebra(h4.mul.with_entry(2, 2, 0, h4.field.one), "bad")
        with caplog.at_level(logging.INFO, logger="homkit"):
            verify(StructureKind.ALGEBRA, bad.algebra)
        assert "CHECK_RESULT: subject=bad:algebra | axiom=hom_associativity | passed=False" in caplog.text

    def test_singular_structure_map_rejected(self, h4) -> None:
        with pytest.raises(Singular):
            HomHopfAlgebra(
                h4.field, 4, h4.labels, h4.mul, h4.unit, h4.comul, h4.counit,
                Matrix.diagonal(h4.field, (1, 1, 0, 1)), antipode=h4.antipode,
            )


@pytest.mark.unit
class TestSweedlerTrees:
    """Tests for iterated coproducts."""

    def test_split_left_and_right_share_support(self, h4) -> None:
        left = {idx for idx, c in h4.sweedler(2, SPLIT_LEFT)}
        right = {idx for idx, c in h4.sweedler(2, SPLIT_RIGHT)}
        assert left == right

    def test_group_like_element(self, h4) -> None:
        assert h4.sweedler(1, SPLIT_LEFT) == [((1, 1, 1), h4.field.one)]


@pytest.mark.unit
class TestYauTwist:
    """Tests for twisting a classical Hopf algebra."""

    def test_twist_of_sweedler_is_h4(self, h4) -> None:
        twisted = yau_twist(corpus.sweedler(), Matrix.diagonal(h4.field, H4_ALPHA), name="H4")
        assert twisted.mul == h4.mul
        assert twisted.comul == h4.comul
        assert twisted.antipode == h4.antipode
        assert verify(StructureKind.HOPF, twisted).passed

    def test_twist_needs_classical_input(self, h4) -> None:
        with pytest.raises(PreconditionFailed):
            yau_twist(h4, Matrix.identity(h4.field, 4))

    def test_twist_rejects_non_endomorphism(self, qq) -> None:
        swap_x_y = Matrix.from_rows(qq, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        with pytest.raises(NotEndomorphism):
            yau_twist(corpus.sweedler(), swap_x_y)

    def test_twist_rejects_singular_map(self, qq) -> None:
        with pytest.raises(Singular):
            yau_twist(corpus.sweedler(), Matrix.diagonal(qq, (1, 1, 0, 0)))


@pytest.mark.unit
class TestDualAndTensors:
    """Tests for the finite dual and tensor constructions."""

    def test_dual_of_h4_is_hopf(self, h4) -> None:
        result = dual(h4)
        assert result.report.passed, result.report.failed_axioms
        assert result.hopf.alpha == h4.alpha.transpose()
        assert result.hopf.unit == h4.counit

    def test_double_dual_recovers_structure(self, h4) -> None:
        twice = dual(dual(h4).hopf).hopf
        assert twice.mul == h4.mul
        assert twice.comul == h4.comul

    def test_tensor_algebra_is_hom_associative(self, h4, kaa) -> None:
        assert verify(StructureKind.ALGEBRA, tensor_algebra(kaa, h4)).passed

    def test_tensor_coalgebra_is_hom_coassociative(self, h4) -> None:
        assert verify(StructureKind.COALGEBRA, tensor_coalgebra(h4, h4)).passed


@pytest.mark.unit
class TestConvolution:
    """Tests for convolution products and inverses."""

    def test_antipode_inverts_identity(self, h4) -> None:
        ident = LinMap(Matrix.identity(h4.field, 4), "H4", "H4")
        S = LinMap(h4.antipode, "H4", "H4")
        unit = convolution_unit(h4, h4)
        assert convolve(h4, h4, S, ident).matrix == unit.matrix
        assert convolve(h4, h4, ident, S).matrix == unit.matrix

    def test_conv_invert_is_two_sided(self, h4) -> None:
        ident = LinMap(Matrix.identity(h4.field, 4), "H4", "H4")
        inv = conv_invert(h4, h4, ident)
        unit = convolution_unit(h4, h4).matrix
        assert convolve(h4, h4, inv, ident).matrix == unit
        assert convolve(h4, h4, ident, inv).matrix == unit

    def test_zero_map_is_not_invertible(self, h4) -> None:
        zero = LinMap(Matrix.zeros(h4.field, 4, 4), "H4", "H4")
        assert not is_conv_invertible(h4, h4, zero)
        with pytest.raises(NotInvertible) as exc:
            conv_invert(h4, h4, zero)
        assert exc.value.reason is InvertibilityFailure.NONE

    def test_every_inverse_found_is_two_sided(self) -> None:
        gf3 = FieldSpec.prime(3)
        H = corpus.kc2(gf3)
        unit = convolution_unit(H, H).matrix
        found = 0
        for entries in itertools.product(gf3.elements(), repeat=4):
            f = LinMap(Matrix(gf3, 2, 2, entries), "kC2", "kC2")
            try:
                g = conv_invert(H, H, f)
            except NotInvertible:
                continue
            found += 1
            assert convolve(H, H, f, g).matrix == unit
            assert convolve(H, H, g, f).matrix == unit
        assert found > 0
