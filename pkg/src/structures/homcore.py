"""Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras.

Every structure is given by structure constants in a fixed basis together
with an invertible structure map α. Axioms are checked by brute force over
all basis tuples; each axiom becomes one named entry of a ``Report``.

Sweedler sums are materialized with an explicit parenthesization tree, since
(Δ⊗id)Δ and (id⊗Δ)Δ differ in the Hom setting::

    SPLIT        h1 ⊗ h2
    SPLIT_LEFT   h11 ⊗ h12 ⊗ h2
    SPLIT_RIGHT  h1 ⊗ h21 ⊗ h22
    SPLIT_BOTH   h11 ⊗ h12 ⊗ h21 ⊗ h22
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Optional, Union

from constants import MAX_WITNESSES
from errors import (
    NoSolution,
    NotEndomorphism,
    NotInvertible,
    PreconditionFailed,
    ShapeMismatch,
    Singular,
    SpaceMismatch,
)
from exactlin import (
    FieldSpec,
    Matrix,
    Scalar,
    Tensor3,
    Vector,
    basis_vector,
    matrix_inverse,
    outer,
    solve_linear,
    vec_add,
    vec_scale,
    vec_sub,
    vec_sum,
    zero_vector,
)
from models import InvertibilityFailure, Report, ReportEntry, StructureKind, Witness
from utils import log_check_result, ordered_map

logger = logging.getLogger("homkit")

Tree = Optional[tuple[Any, Any]]

LEAF: Tree = None
SPLIT: Tree = (LEAF, LEAF)
SPLIT_LEFT: Tree = (SPLIT, LEAF)
SPLIT_RIGHT: Tree = (LEAF, SPLIT)
SPLIT_BOTH: Tree = (SPLIT, SPLIT)

SweedlerTerms = list[tuple[tuple[int, ...], Scalar]]


# =============================================================================
# RESIDUAL CHECKS
# =============================================================================


def identity_entry(
    name: str,
    fld: FieldSpec,
    dims: Sequence[int],
    lhs: Callable[..., Vector],
    rhs: Callable[..., Vector],
) -> ReportEntry:
    """Compare ``lhs(*idx)`` and ``rhs(*idx)`` over every basis multi-index."""

    def witnesses():
        for idx in itertools.product(*(range(d) for d in dims)):
            r = vec_sub(lhs(*idx), rhs(*idx))
            if any(r):
                yield Witness(tuple(idx), tuple(fld.format(x) for x in r))

    return ReportEntry.from_witnesses(name, witnesses(), keep=MAX_WITNESSES)


def combine_entries(name: str, *entries: ReportEntry) -> ReportEntry:
    """Fold several sub-checks into one named entry."""
    kept = tuple(w for e in entries for w in e.witnesses)[:MAX_WITNESSES]
    return ReportEntry(
        name,
        all(e.passed for e in entries),
        kept,
        sum(e.witness_count for e in entries),
    )


Check = tuple[str, Callable[[], ReportEntry]]


def run_checks(subject: str, checks: Sequence[Check], notes: Sequence[str] = ()) -> Report:
    """Evaluate named checks in parallel; entries keep the listed order."""
    entries = ordered_map(lambda check: check[1](), checks)
    for entry in entries:
        log_check_result(subject, entry)
    return Report(subject, tuple(entries), tuple(notes))


# =============================================================================
# STRUCTURE MIXINS
# =============================================================================


class _Based:
    field: FieldSpec
    dim: int
    alpha: Matrix
    _cache: dict

    def e(self, i: int) -> Vector:
        key = ("e", i)
        if key not in self._cache:
            self._cache[key] = basis_vector(self.field, self.dim, i)
        return self._cache[key]

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    @cached_property
    def alpha_inverse(self) -> Matrix:
        return matrix_inverse(self.alpha)

    def alpha_pow(self, k: int) -> Matrix:
        key = ("alpha", k)
        if key not in self._cache:
            if k == 0:
                m = Matrix.identity(self.field, self.dim)
            elif k > 0:
                m = self.alpha_pow(k - 1) @ self.alpha
            else:
                m = self.alpha_pow(k + 1) @ self.alpha_inverse
            self._cache[key] = m
        return self._cache[key]

    def twist(self, k: int, v: Vector) -> Vector:
        """α^k(v)."""
        return self.alpha_pow(k).apply(v)

    def twist_basis(self, k: int, i: int) -> Vector:
        """α^k(e_i)."""
        return self.alpha_pow(k).column(i)


class AlgebraOps(_Based):
    """Product-side operations of anything with ``mul`` and ``unit``."""

    mul: Tensor3
    unit: Vector

    def product(self, u: Vector, v: Vector) -> Vector:
        return self.mul.bilinear(u, v)

    def left_mult(self, u: Vector) -> Matrix:
        """Matrix of v ↦ u·v."""
        cols = [self.product(u, self.e(m)) for m in range(self.dim)]
        return Matrix.from_columns(self.field, self.dim, cols)


class CoalgebraOps(_Based):
    """Coproduct-side operations of anything with ``comul`` and ``counit``."""

    comul: Tensor3
    counit: Vector

    def coproduct(self, v: Vector) -> Vector:
        """Δ(v), flattened with index ``j * dim + k``."""
        return self.comul.linear(v)

    def counit_of(self, v: Vector) -> Scalar:
        acc = self.field.zero
        for a, b in zip(self.counit, v):
            if a and b:
                acc += a * b
        return acc

    def sweedler(self, i: int, tree: Tree) -> SweedlerTerms:
        """Iterated coproduct of ``e_i`` shaped by ``tree`` as (indices, coefficient)."""
        key = ("sweedler", i, tree)
        if key in self._cache:
            return self._cache[key]
        if tree is None:
            out: SweedlerTerms = [((i,), self.field.one)]
        else:
            left, right = tree
            out = []
            for j, k, c in self.comul.terms(i):
                for lidx, lc in self.sweedler(j, left):
                    for ridx, rc in self.sweedler(k, right):
                        out.append((lidx + ridx, c * lc * rc))
        self._cache[key] = out
        return out

    def sweedler_of(self, v: Vector, tree: Tree) -> SweedlerTerms:
        out: SweedlerTerms = []
        for i, a in enumerate(v):
            if a:
                out.extend((idx, a * c) for idx, c in self.sweedler(i, tree))
        return out


def _check_shapes(obj: Any, has_mul: bool, has_comul: bool) -> None:
    n = obj.dim
    if n < 1:
        raise ShapeMismatch("dimension must be positive")
    if len(obj.labels) != n:
        raise ShapeMismatch(f"{len(obj.labels)} labels for dimension {n}")
    if obj.alpha.shape != (n, n):
        raise ShapeMismatch(f"alpha has shape {obj.alpha.shape}, expected {(n, n)}")
    obj.field.check_same(obj.alpha.field)
    if has_mul:
        if obj.mul.dims != (n, n, n) or len(obj.unit) != n:
            raise ShapeMismatch("multiplication tensor or unit has the wrong shape")
        obj.field.check_same(obj.mul.field)
    if has_comul:
        if obj.comul.dims != (n, n, n) or len(obj.counit) != n:
            raise ShapeMismatch("comultiplication tensor or counit has the wrong shape")
        obj.field.check_same(obj.comul.field)
    try:
        obj.alpha_inverse  # noqa: B018
    except Singular as e:
        raise Singular(f"structure map of {obj.name} is not invertible") from e


# =============================================================================
# STRUCTURES
# =============================================================================


@dataclass(frozen=True)
class HomAlgebra(AlgebraOps):
    """Unital Hom-associative algebra (A, μ, 1, α)."""

    field: FieldSpec
    dim: int
    labels: tuple[str, ...]
    mul: Tensor3
    unit: Vector
    alpha: Matrix
    name: str = field(default="A", kw_only=True)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_shapes(self, has_mul=True, has_comul=False)


@dataclass(frozen=True)
class HomCoalgebra(CoalgebraOps):
    """Counital Hom-coassociative coalgebra (C, Δ, ε, α)."""

    field: FieldSpec
    dim: int
    labels: tuple[str, ...]
    comul: Tensor3
    counit: Vector
    alpha: Matrix
    name: str = field(default="C", kw_only=True)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_shapes(self, has_mul=False, has_comul=True)


@dataclass(frozen=True)
class HomBialgebra(AlgebraOps, CoalgebraOps):
    """Algebra and coalgebra on one space sharing α.

    Also used for spaces carrying both structures without the bialgebra
    compatibility (the base algebra of a biproduct).
    """

    field: FieldSpec
    dim: int
    labels: tuple[str, ...]
    mul: Tensor3
    unit: Vector
    comul: Tensor3
    counit: Vector
    alpha: Matrix
    name: str = field(default="H", kw_only=True)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_shapes(self, has_mul=True, has_comul=True)

    @cached_property
    def algebra(self) -> HomAlgebra:
        return HomAlgebra(
            self.field, self.dim, self.labels, self.mul, self.unit, self.alpha, name=self.name
        )

    @cached_property
    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(
            self.field, self.dim, self.labels, self.comul, self.counit, self.alpha, name=self.name
        )


@dataclass(frozen=True)
class HomHopfAlgebra(HomBialgebra):
    """Hom-bialgebra with antipode S."""

    antipode: Matrix = field(kw_only=True)

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.antipode.shape != (self.dim, self.dim):
            raise ShapeMismatch(f"antipode has shape {self.antipode.shape}")

    @cached_property
    def antipode_inverse(self) -> Matrix | None:
        try:
            return matrix_inverse(self.antipode)
        except Singular:
            return None

    @property
    def antipode_invertible(self) -> bool:
        return self.antipode_inverse is not None

    def require_antipode_inverse(self) -> Matrix:
        inv = self.antipode_inverse
        if inv is None:
            raise PreconditionFailed(f"antipode of {self.name} is not invertible")
        return inv

    def with_algebra(self, mul: Tensor3, name: str) -> HomHopfAlgebra:
        """Same coalgebra/antipode data with a replaced multiplication."""
        return HomHopfAlgebra(
            self.field,
            self.dim,
            self.labels,
            mul,
            self.unit,
            self.comul,
            self.counit,
            self.alpha,
            name=name,
            antipode=self.antipode,
        )


AnyAlgebra = Union[HomAlgebra, HomBialgebra]
AnyCoalgebra = Union[HomCoalgebra, HomBialgebra]


@dataclass(frozen=True)
class LinMap:
    """Linear map between two named spaces; ``matrix`` is codomain × domain."""

    matrix: Matrix
    source: str
    target: str

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def image(self, i: int) -> Vector:
        return self.matrix.column(i)


# =============================================================================
# TENSOR CONSTRUCTIONS
# =============================================================================


def tensor_vectors(
    a: AlgebraOps, b: AlgebraOps, u: Vector, v: Vector
) -> Vector:
    """Product in the tensor algebra A⊗B of flattened elements u, v."""
    nb = b.dim
    acc = [a.field.zero] * (a.dim * nb)
    su = [(p, c) for p, c in enumerate(u) if c]
    sv = [(q, c) for q, c in enumerate(v) if c]
    for p, cu in su:
        for q, cv in sv:
            left = a.product(a.e(p // nb), a.e(q // nb))
            right = b.product(b.e(p % nb), b.e(q % nb))
            c = cu * cv
            for x, lx in enumerate(left):
                if lx:
                    for y, ry in enumerate(right):
                        if ry:
                            acc[x * nb + y] += c * lx * ry
    return tuple(acc)


def tensor_algebra(a: AnyAlgebra, b: AnyAlgebra, name: str | None = None) -> HomAlgebra:
    """A⊗B with componentwise product and structure map α_A⊗α_B."""
    a.field.check_same(b.field)
    dims = (a.dim * b.dim,) * 3
    n = a.dim * b.dim

    def fiber(p: int, q: int) -> Vector:
        return tensor_vectors(a, b, basis_vector(a.field, n, p), basis_vector(a.field, n, q))

    return HomAlgebra(
        a.field,
        n,
        tuple(f"{x}⊗{y}" for x in a.labels for y in b.labels),
        Tensor3.from_bilinear(a.field, dims, fiber),
        outer(a.unit, b.unit),
        a.alpha.kron(b.alpha),
        name=name or f"{a.name}⊗{b.name}",
    )


def tensor_coalgebra(c: AnyCoalgebra, d: AnyCoalgebra, name: str | None = None) -> HomCoalgebra:
    """C⊗D with Δ(c⊗d) = (c1⊗d1)⊗(c2⊗d2)."""
    c.field.check_same(d.field)
    nd = d.dim
    n = c.dim * nd

    def image(p: int) -> Vector:
        acc = [c.field.zero] * (n * n)
        for j, k, x in c.comul.terms(p // nd):
            for j2, k2, y in d.comul.terms(p % nd):
                acc[(j * nd + j2) * n + (k * nd + k2)] += x * y
        return tuple(acc)

    return HomCoalgebra(
        c.field,
        n,
        tuple(f"{x}⊗{y}" for x in c.labels for y in d.labels),
        Tensor3.from_images(c.field, (n, n, n), image),
        outer(c.counit, d.counit),
        c.alpha.kron(d.alpha),
        name=name or f"{c.name}⊗{d.name}",
    )


def ground_field(fld: FieldSpec) -> HomHopfAlgebra:
    """The one-dimensional Hom-Hopf algebra k with α = id."""
    one = Tensor3(fld, (1, 1, 1), (fld.one,))
    ident = Matrix.identity(fld, 1)
    return HomHopfAlgebra(
        fld, 1, ("1",), one, (fld.one,), one, (fld.one,), ident, name="k", antipode=ident
    )


# =============================================================================
# AXIOM VERIFICATION
# =============================================================================


def algebra_checks(A: AnyAlgebra) -> list[Check]:
    n, fld, e = A.dim, A.field, A.e
    return [
        (
            "alpha_multiplicative",
            lambda: identity_entry(
                "alpha_multiplicative", fld, (n, n),
                lambda i, j: A.twist(1, A.product(e(i), e(j))),
                lambda i, j: A.product(A.twist_basis(1, i), A.twist_basis(1, j)),
            ),
        ),
        (
            "alpha_unit",
            lambda: identity_entry(
                "alpha_unit", fld, (), lambda: A.twist(1, A.unit), lambda: A.unit
            ),
        ),
        (
            "left_unit",
            lambda: identity_entry(
                "left_unit", fld, (n,),
                lambda i: A.product(A.unit, e(i)),
                lambda i: A.twist_basis(1, i),
            ),
        ),
        (
            "right_unit",
            lambda: identity_entry(
                "right_unit", fld, (n,),
                lambda i: A.product(e(i), A.unit),
                lambda i: A.twist_basis(1, i),
            ),
        ),
        (
            "hom_associativity",
            lambda: identity_entry(
                "hom_associativity", fld, (n, n, n),
                lambda i, j, k: A.product(A.twist_basis(1, i), A.product(e(j), e(k))),
                lambda i, j, k: A.product(A.product(e(i), e(j)), A.twist_basis(1, k)),
            ),
        ),
    ]


def _apply_left(C: CoalgebraOps, m: Matrix, flat: Vector) -> Vector:
    """(m ⊗ id) on a flattened element of C⊗C."""
    return m.kron(Matrix.identity(C.field, C.dim)).apply(flat)


def _apply_right(C: CoalgebraOps, m: Matrix, flat: Vector) -> Vector:
    return Matrix.identity(C.field, C.dim).kron(m).apply(flat)


def coalgebra_checks(C: AnyCoalgebra) -> list[Check]:
    n, fld, e = C.dim, C.field, C.e
    counit_row = Matrix(fld, 1, n, C.counit)

    def delta_alpha(i: int) -> Vector:
        return vec_sum(
            fld, n**3,
            (vec_scale(c, outer(C.coproduct(e(j)), C.twist_basis(1, k))) for j, k, c in C.comul.terms(i)),
        )

    def alpha_delta(i: int) -> Vector:
        return vec_sum(
            fld, n**3,
            (vec_scale(c, outer(C.twist_basis(1, j), C.coproduct(e(k)))) for j, k, c in C.comul.terms(i)),
        )

    return [
        (
            "counit_alpha",
            lambda: identity_entry(
                "counit_alpha", fld, (n,),
                lambda i: (C.counit_of(C.twist_basis(1, i)),),
                lambda i: (C.counit[i],),
            ),
        ),
        (
            "alpha_comultiplicative",
            lambda: identity_entry(
                "alpha_comultiplicative", fld, (n,),
                lambda i: C.alpha.kron(C.alpha).apply(C.coproduct(e(i))),
                lambda i: C.coproduct(C.twist_basis(1, i)),
            ),
        ),
        (
            "left_counit",
            lambda: identity_entry(
                "left_counit", fld, (n,),
                lambda i: _apply_left(C, counit_row, C.coproduct(e(i))),
                lambda i: C.twist_basis(1, i),
            ),
        ),
        (
            "right_counit",
            lambda: identity_entry(
                "right_counit", fld, (n,),
                lambda i: _apply_right(C, counit_row, C.coproduct(e(i))),
                lambda i: C.twist_basis(1, i),
            ),
        ),
        (
            "hom_coassociativity",
            lambda: identity_entry("hom_coassociativity", fld, (n,), delta_alpha, alpha_delta),
        ),
    ]


def bialgebra_checks(H: HomBialgebra) -> list[Check]:
    n, fld, e = H.dim, H.field, H.e
    return [
        (
            "comul_multiplicative",
            lambda: identity_entry(
                "comul_multiplicative", fld, (n, n),
                lambda i, j: H.coproduct(H.product(e(i), e(j))),
                lambda i, j: tensor_vectors(H, H, H.coproduct(e(i)), H.coproduct(e(j))),
            ),
        ),
        (
            "comul_unit",
            lambda: identity_entry(
                "comul_unit", fld, (), lambda: H.coproduct(H.unit), lambda: outer(H.unit, H.unit)
            ),
        ),
        (
            "counit_multiplicative",
            lambda: identity_entry(
                "counit_multiplicative", fld, (n, n),
                lambda i, j: (H.counit_of(H.product(e(i), e(j))),),
                lambda i, j: (H.counit[i] * H.counit[j],),
            ),
        ),
        (
            "counit_unit",
            lambda: identity_entry(
                "counit_unit", fld, (), lambda: (H.counit_of(H.unit),), lambda: (fld.one,)
            ),
        ),
    ]


def hopf_checks(H: HomHopfAlgebra) -> list[Check]:
    n, fld, e = H.dim, H.field, H.e
    S = H.antipode

    def eps_unit(i: int) -> Vector:
        return vec_scale(H.counit[i], H.unit)

    def convolve_with(i: int, left: bool) -> Vector:
        terms = H.comul.terms(i)
        if left:
            parts = (vec_scale(c, H.product(S.column(j), e(k))) for j, k, c in terms)
        else:
            parts = (vec_scale(c, H.product(e(j), S.column(k))) for j, k, c in terms)
        return vec_sum(fld, n, parts)

    def flipped(i: int) -> Vector:
        return vec_sum(
            fld, n * n, (vec_scale(c, outer(S.column(k), S.column(j))) for j, k, c in H.comul.terms(i))
        )

    return [
        (
            "antipode_alpha",
            lambda: identity_entry(
                "antipode_alpha", fld, (n,),
                lambda i: S.apply(H.twist_basis(1, i)),
                lambda i: H.twist(1, S.column(i)),
            ),
        ),
        (
            "antipode_left",
            lambda: identity_entry("antipode_left", fld, (n,), lambda i: convolve_with(i, True), eps_unit),
        ),
        (
            "antipode_right",
            lambda: identity_entry("antipode_right", fld, (n,), lambda i: convolve_with(i, False), eps_unit),
        ),
        (
            "antipode_anticomultiplicative",
            lambda: identity_entry(
                "antipode_anticomultiplicative", fld, (n,),
                lambda i: H.coproduct(S.column(i)),
                flipped,
            ),
        ),
        (
            "antipode_antimultiplicative",
            lambda: identity_entry(
                "antipode_antimultiplicative", fld, (n, n),
                lambda i, j: S.apply(H.product(e(i), e(j))),
                lambda i, j: H.product(S.column(j), S.column(i)),
            ),
        ),
        (
            "antipode_counit",
            lambda: identity_entry(
                "antipode_counit", fld, (n,),
                lambda i: (H.counit_of(S.column(i)),),
                lambda i: (H.counit[i],),
            ),
        ),
    ]


def verify(kind: StructureKind | str, X: Any) -> Report:
    """Check every axiom of ``kind`` on ``X``.

    Raises:
        ShapeMismatch: ``X`` lacks the structure ``kind`` asks for.
    """
    kind = StructureKind(kind)
    needs = {
        StructureKind.ALGEBRA: (AlgebraOps,),
        StructureKind.COALGEBRA: (CoalgebraOps,),
        StructureKind.BIALGEBRA: (HomBialgebra,),
        StructureKind.HOPF: (HomHopfAlgebra,),
    }[kind]
    if not isinstance(X, needs):
        raise ShapeMismatch(f"{type(X).__name__} cannot be verified as {kind.value}")
    checks: list[Check] = []
    if kind in (StructureKind.ALGEBRA, StructureKind.BIALGEBRA, StructureKind.HOPF):
        checks += algebra_checks(X)
    if kind in (StructureKind.COALGEBRA, StructureKind.BIALGEBRA, StructureKind.HOPF):
        checks += coalgebra_checks(X)
    if kind in (StructureKind.BIALGEBRA, StructureKind.HOPF):
        checks += bialgebra_checks(X)
    if kind is StructureKind.HOPF:
        checks += hopf_checks(X)
    return run_checks(f"{X.name}:{kind.value}", checks)


# =============================================================================
# YAU TWIST AND DUAL
# =============================================================================


def yau_twist(H: HomHopfAlgebra, endo: Matrix, name: str | None = None) -> HomHopfAlgebra:
    """Twist a classical Hopf algebra (α = id) by a Hopf automorphism.

    Returns (H, endo∘μ, 1, Δ∘endo, ε, S, endo).

    Raises:
        PreconditionFailed: ``H`` is not classical.
        ShapeMismatch: ``endo`` has the wrong shape.
        Singular: ``endo`` is not invertible.
        NotEndomorphism: ``endo`` breaks one of the five Hopf laws.
    """
    if not H.alpha.is_identity():
        raise PreconditionFailed("yau_twist expects classical input with alpha = id")
    if endo.shape != (H.dim, H.dim):
        raise ShapeMismatch(f"endomorphism of shape {endo.shape} on dimension {H.dim}")
    matrix_inverse(endo)
    n, e = H.dim, H.e
    laws = {
        "multiplicative": all(
            endo.apply(H.product(e(i), e(j))) == H.product(endo.column(i), endo.column(j))
            for i in range(n)
            for j in range(n)
        ),
        "unital": endo.apply(H.unit) == H.unit,
        "comultiplicative": all(
            endo.kron(endo).apply(H.coproduct(e(i))) == H.coproduct(endo.column(i))
            for i in range(n)
        ),
        "counital": all(H.counit_of(endo.column(i)) == H.counit[i] for i in range(n)),
        "antipode": endo @ H.antipode == H.antipode @ endo,
    }
    for law, ok in laws.items():
        if not ok:
            raise NotEndomorphism(law)
    dims = (n, n, n)
    return HomHopfAlgebra(
        H.field,
        n,
        H.labels,
        Tensor3.from_bilinear(H.field, dims, lambda i, j: endo.apply(H.mul.fiber(i, j))),
        H.unit,
        Tensor3.from_images(H.field, dims, lambda i: H.coproduct(endo.column(i))),
        H.counit,
        endo,
        name=name or f"{H.name}_alpha",
        antipode=H.antipode,
    )


@dataclass(frozen=True)
class DualResult:
    hopf: HomHopfAlgebra
    report: Report


def dual(H: HomHopfAlgebra) -> DualResult:
    """Finite dual H* with transposed structure constants, verified."""
    n, fld = H.dim, H.field
    dims = (n, n, n)
    Hd = HomHopfAlgebra(
        fld,
        n,
        tuple(f"{label}*" for label in H.labels),
        Tensor3.from_function(fld, dims, lambda i, j, k: H.comul.entry(k, i, j)),
        H.counit,
        Tensor3.from_function(fld, dims, lambda i, j, k: H.mul.entry(j, k, i)),
        H.unit,
        H.alpha.transpose(),
        name=f"{H.name}*",
        antipode=H.antipode.transpose(),
    )
    return DualResult(Hd, verify(StructureKind.HOPF, Hd))


# =============================================================================
# CONVOLUTION
# =============================================================================


def _check_map(C: AnyCoalgebra, A: AnyAlgebra, f: LinMap) -> None:
    C.field.check_same(A.field)
    if f.matrix.shape != (A.dim, C.dim):
        raise SpaceMismatch(
            f"map {f.source}→{f.target} of shape {f.matrix.shape}, expected {(A.dim, C.dim)}"
        )


def convolution_unit(C: AnyCoalgebra, A: AnyAlgebra) -> LinMap:
    """η∘ε."""
    cols = [vec_scale(C.counit[i], A.unit) for i in range(C.dim)]
    return LinMap(Matrix.from_columns(A.field, A.dim, cols), C.name, A.name)


def convolve(C: AnyCoalgebra, A: AnyAlgebra, f: LinMap, g: LinMap) -> LinMap:
    """f*g = μ_A∘(f⊗g)∘Δ_C.

    Raises:
        SpaceMismatch: f and g do not both map C to A.
    """
    _check_map(C, A, f)
    _check_map(C, A, g)
    if (f.source, f.target) != (g.source, g.target):
        raise SpaceMismatch(f"{f.source}→{f.target} vs {g.source}→{g.target}")
    cols = [
        vec_sum(
            A.field, A.dim,
            (vec_scale(c, A.product(f.image(j), g.image(k))) for j, k, c in C.comul.terms(i)),
        )
        for i in range(C.dim)
    ]
    return LinMap(Matrix.from_columns(A.field, A.dim, cols), f.source, f.target)


def _convolution_rows(C: AnyCoalgebra, A: AnyAlgebra, f: LinMap, f_first: bool) -> list[list[Scalar]]:
    """Coefficients of f*g (``f_first``) or g*f as linear in the entries of g.

    Unknown g[m][k] sits at column m * dim(C) + k; equation row is i * dim(A) + r.
    """
    nc, na, fld = C.dim, A.dim, A.field
    rows = [[fld.zero] * (na * nc) for _ in range(nc * na)]
    if f_first:
        mults = [A.left_mult(f.image(j)) for j in range(nc)]
    else:
        mults = [
            Matrix.from_columns(fld, na, [A.product(A.e(p), f.image(k)) for p in range(na)])
            for k in range(nc)
        ]
    for i in range(nc):
        for j, k, c in C.comul.terms(i):
            M, g_index = (mults[j], k) if f_first else (mults[k], j)
            for r in range(na):
                row = rows[i * na + r]
                for m in range(na):
                    x = M.entry(r, m)
                    if x:
                        row[m * nc + g_index] += c * x
    return rows


def conv_invert(C: AnyCoalgebra, A: AnyAlgebra, f: LinMap) -> LinMap:
    """Two-sided convolution inverse of ``f``.

    Solves f*g = η∘ε and g*f = η∘ε together, both linear in the entries of g.

    Raises:
        NotInvertible: with reason ``one_sided`` if only one of the two
            equations has a solution, ``none`` if neither has.
    """
    _check_map(C, A, f)
    nc, na, fld = C.dim, A.dim, A.field
    unit = convolution_unit(C, A)
    rhs = tuple(unit.matrix.entry(r, i) for i in range(nc) for r in range(na))
    right = _convolution_rows(C, A, f, f_first=True)
    left = _convolution_rows(C, A, f, f_first=False)

    def solve(rows: list[list[Scalar]], copies: int) -> Matrix:
        system = Matrix(fld, len(rows), na * nc, tuple(x for row in rows for x in row))
        return solve_linear(system, Matrix.from_columns(fld, len(rows), [rhs * copies])).solution

    try:
        sol = solve(right + left, 2)
    except NoSolution:
        reason = InvertibilityFailure.NONE
        for rows in (right, left):
            try:
                solve(rows, 1)
            except NoSolution:
                continue
            reason = InvertibilityFailure.ONE_SIDED
        raise NotInvertible(reason, f"{f.source}→{f.target}") from None
    return LinMap(Matrix(fld, na, nc, sol.column(0)), f.source, f.target)


def is_conv_invertible(C: AnyCoalgebra, A: AnyAlgebra, f: LinMap) -> bool:
    try:
        conv_invert(C, A, f)
    except NotInvertible:
        return False
    return True


__all__ = [
    "LEAF",
    "SPLIT",
    "SPLIT_BOTH",
    "SPLIT_LEFT",
    "SPLIT_RIGHT",
    "DualResult",
    "HomAlgebra",
    "HomBialgebra",
    "HomCoalgebra",
    "HomHopfAlgebra",
    "LinMap",
    "combine_entries",
    "conv_invert",
    "convolution_unit",
    "convolve",
    "dual",
    "ground_field",
    "identity_entry",
    "is_conv_invertible",
    "run_checks",
    "tensor_algebra",
    "tensor_coalgebra",
    "tensor_vectors",
    "verify",
    "yau_twist",
]
