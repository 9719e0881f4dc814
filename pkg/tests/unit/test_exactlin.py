"""Tests for exact linear algebra over Q and GF(p).

These tests cover field parsing and formatting, exact solving, kernels and
inverses (property-based), and the rank-3 tensor helpers.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import FieldMismatch, InvalidField, NoSolution, ShapeMismatch, Singular
from exactlin import (
    FieldSpec,
    Matrix,
    Tensor3,
    basis_vector,
    flatten,
    kernel,
    matrix_inverse,
    outer,
    solve_linear,
    solve_vector,
    unflatten,
)

QQ_FIELD = FieldSpec.rationals()
GF7 = FieldSpec.prime(7)

small_ints = st.integers(min_value=-4, max_value=4)


def square_matrices(n: int):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def rect_matrices(rows: int, cols: int):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@pytest.mark.unit
class TestFieldSpec:
    """Tests for parsing, converting and formatting scalars."""

    @pytest.mark.parametrize("text", ["Q", "qq", "rationals", " Q "])
    def test_parse_rationals(self, text: str) -> None:
        assert FieldSpec.parse(text) == QQ_FIELD

    @pytest.mark.parametrize("text", ["gf:5", "GF(5)", "gf(5)"])
    def test_parse_prime(self, text: str) -> None:
        fld = FieldSpec.parse(text)
        assert fld.is_finite
        assert fld.p == 5
        assert fld.name == "gf:5"

    @pytest.mark.parametrize("text", ["gf:4", "gf:1", "R", "gf:", "gf:2147483659"])
    def test_parse_rejects_bad_fields(self, text: str) -> None:
        with pytest.raises(InvalidField):
            FieldSpec.parse(text)

    def test_rational_formatting(self) -> None:
        assert QQ_FIELD.format(QQ_FIELD.scalar("6/8")) == "3/4"
        assert QQ_FIELD.format(QQ_FIELD.scalar(-2)) == "-2"
        assert QQ_FIELD.format(QQ_FIELD.scalar(Fraction(1, 2))) == "1/2"

    def test_prime_formatting_uses_residues(self) -> None:
        fld = FieldSpec.prime(5)
        assert fld.format(fld.scalar(-1)) == "4"
        assert fld.format(fld.scalar("1/2")) == "3"

    def test_scalar_rejects_garbage(self) -> None:
        with pytest.raises(ValueError):
            QQ_FIELD.scalar("1.5")

    def test_zero_denominator_in_prime_field(self) -> None:
        with pytest.raises(ZeroDivisionError):
            FieldSpec.prime(3).scalar("1/3")

    def test_elements_of_prime_field(self) -> None:
        assert [GF7.format(x) for x in GF7.elements()] == [str(i) for i in range(7)]

    def test_elements_of_rationals_rejected(self) -> None:
        with pytest.raises(InvalidField):
            QQ_FIELD.elements()

    def test_field_mismatch(self) -> None:
        with pytest.raises(FieldMismatch):
            Matrix.identity(QQ_FIELD, 2) @ Matrix.identity(GF7, 2)


@pytest.mark.unit
class TestLinearSystems:
    """Tests for exact solving, kernels and inverses."""

    def test_inconsistent_system(self) -> None:
        a = Matrix.from_rows(QQ_FIELD, [[1, 1], [1, 1]])
        with pytest.raises(NoSolution):
            solve_vector(a, (QQ_FIELD.one, QQ_FIELD.zero))

    def test_particular_solution_sets_free_variables_to_zero(self) -> None:
        a = Matrix.from_rows(QQ_FIELD, [[1, 2, 0]])
        x, ker = solve_vector(a, (QQ_FIELD.scalar(3),))
        assert x == (QQ_FIELD.scalar(3), QQ_FIELD.zero, QQ_FIELD.zero)
        assert len(ker) == 2

    def test_singular_inverse(self) -> None:
        with pytest.raises(Singular):
            matrix_inverse(Matrix.from_rows(QQ_FIELD, [[1, 2], [2, 4]]))

    def test_non_square_inverse(self) -> None:
        with pytest.raises(ShapeMismatch):
            matrix_inverse(Matrix.from_rows(QQ_FIELD, [[1, 2, 3]]))

    def test_inverse_over_prime_field(self) -> None:
        a = Matrix.from_rows(GF7, [[2, 1], [1, 1]])
        assert (a @ matrix_inverse(a)).is_identity()

    def test_solve_linear_multiple_right_hand_sides(self) -> None:
        a = Matrix.from_rows(QQ_FIELD, [[2, 0], [0, 4]])
        sol = solve_linear(a, Matrix.identity(QQ_FIELD, 2))
        assert sol.solution == Matrix.from_rows(QQ_FIELD, [["1/2", 0], [0, "1/4"]])
        assert sol.kernel_basis == ()

    @settings(max_examples=60, deadline=None)
    @given(square_matrices(3))
    def test_inverse_is_two_sided(self, rows) -> None:
        a = Matrix.from_rows(QQ_FIELD, rows)
        if a.rank() < 3:
            with pytest.raises(Singular):
                matrix_inverse(a)
            return
        inv = matrix_inverse(a)
        assert (a @ inv).is_identity()
        assert (inv @ a).is_identity()

    @settings(max_examples=60, deadline=None)
    @given(rect_matrices(3, 4))
    def test_rank_nullity(self, rows) -> None:
        a = Matrix.from_rows(QQ_FIELD, rows)
        ker = kernel(a)
        assert a.rank() + len(ker) == 4
        for v in ker:
            assert not any(a.apply(v))

    @settings(max_examples=60, deadline=None)
    @given(rect_matrices(3, 3), st.lists(small_ints, min_size=3, max_size=3))
    def test_solutions_satisfy_the_system(self, rows, xs) -> None:
        a = Matrix.from_rows(GF7, rows)
        b = a.apply(tuple(GF7.scalar(x) for x in xs))
        x, _ = solve_vector(a, b)
        assert a.apply(x) == b


@pytest.mark.unit
class TestMatricesAndTensors:
    """Tests for Kronecker products, powers and the Tensor3 container."""

    def test_kron_matches_outer(self) -> None:
        a = Matrix.from_rows(QQ_FIELD, [[1, 2], [0, 1]])
        b = Matrix.from_rows(QQ_FIELD, [[0, 1], [1, 0]])
        u = (QQ_FIELD.scalar(1), QQ_FIELD.scalar(3))
        v = (QQ_FIELD.scalar(2), QQ_FIELD.scalar(-1))
        assert a.kron(b).apply(outer(u, v)) == outer(a.apply(u), b.apply(v))

    def test_negative_power_is_inverse_power(self) -> None:
        a = Matrix.from_rows(QQ_FIELD, [[1, 1], [0, 1]])
        assert a.power(-2) == Matrix.from_rows(QQ_FIELD, [[1, -2], [0, 1]])

    def test_flatten_roundtrip_indices(self) -> None:
        dims = (2, 3, 4)
        assert flatten((1, 2, 3), dims) == 23
        assert unflatten(23, dims) == (1, 2, 3)

    def test_tensor_shape_checked(self) -> None:
        with pytest.raises(ShapeMismatch):
            Tensor3(QQ_FIELD, (2, 2, 2), (QQ_FIELD.zero,) * 7)

    def test_bilinear_and_terms(self) -> None:
        t = Tensor3.zeros(QQ_FIELD, (2, 2, 2)).with_entry(1, 0, 1, QQ_FIELD.scalar(5))
        e0, e1 = basis_vector(QQ_FIELD, 2, 0), basis_vector(QQ_FIELD, 2, 1)
        assert t.bilinear(e1, e0) == (QQ_FIELD.zero, QQ_FIELD.scalar(5))
        assert t.terms(1) == ((0, 1, QQ_FIELD.scalar(5)),)
        assert t.terms(0) == ()

    def test_linear_flattens_images(self) -> None:
        t = Tensor3.from_images(QQ_FIELD, (1, 2, 2), lambda i: tuple(QQ_FIELD.scalar(k) for k in range(4)))
        assert t.linear((QQ_FIELD.scalar(2),)) == tuple(QQ_FIELD.scalar(2 * k) for k in range(4))

    def test_contract_with_vector_sums_an_axis(self) -> None:
        t = Tensor3.from_function(QQ_FIELD, (2, 2, 2), lambda i, j, k: QQ_FIELD.scalar(i + j + k))
        m = t.contract(2, (QQ_FIELD.one, QQ_FIELD.one))
        assert m == Matrix.from_rows(QQ_FIELD, [[1, 3], [3, 5]])

    def test_contract_with_identity_is_noop(self) -> None:
        t = Tensor3.from_function(QQ_FIELD, (2, 3, 2), lambda i, j, k: QQ_FIELD.scalar(i * j - k))
        assert t.contract(1, Matrix.identity(QQ_FIELD, 3)) == t
