"""Hom-comodule algebras, coinvariants and cleft extensions.

A right coaction ρ: B → B⊗H is stored as a ``Tensor3`` of dims
(dim B, dim B, dim H), flat index ``b * dim(H) + h``; a left coaction
λ: B → H⊗B has dims (dim B, dim H, dim B), flat index ``h * dim(B) + b``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from errors import NoSolution, NotClosed, NotInA, NotInvertible, PreconditionFailed, ShapeMismatch
from exactlin import Matrix, Tensor3, Vector, kernel, outer, solve_vector, vec_scale, vec_sub, vec_sum
from models import InvertibilityFailure, Report, ReportEntry
from structures.crossed import (
    CocycleMap,
    CrossedProduct,
    WeakAction,
    build_crossed_product,
    crossed_product_conditions,
)
from structures.homcore import (
    SPLIT,
    SPLIT_RIGHT,
    AnyAlgebra,
    HomAlgebra,
    HomHopfAlgebra,
    LinMap,
    conv_invert,
    convolution_unit,
    convolve,
    identity_entry,
    is_conv_invertible,
    run_checks,
    tensor_vectors,
)

logger = logging.getLogger("homkit")


def coaction_matrix(t: Tensor3) -> Matrix:
    """Matrix whose column i is the flattened image of e_i."""
    _, d2, d3 = t.dims
    return Matrix.from_columns(t.field, d2 * d3, [t.image(i) for i in range(t.dims[0])])


def _comul_matrix(H: HomHopfAlgebra) -> Matrix:
    return coaction_matrix(H.comul)


# =============================================================================
# COMODULE ALGEBRAS
# =============================================================================


@dataclass(frozen=True)
class ComoduleAlgebra:
    """Right Hom-comodule algebra (B, ρ) over H."""

    algebra: AnyAlgebra
    hopf: HomHopfAlgebra
    rho: Tensor3

    def __post_init__(self) -> None:
        self.algebra.field.check_same(self.hopf.field)
        dims = (self.algebra.dim, self.algebra.dim, self.hopf.dim)
        if self.rho.dims != dims:
            raise ShapeMismatch(f"coaction tensor {self.rho.dims}, expected {dims}")

    def coact(self, v: Vector) -> Vector:
        return self.rho.linear(v)


@dataclass(frozen=True)
class LeftComoduleAlgebra:
    """Left Hom-comodule algebra (B, λ) over H."""

    algebra: AnyAlgebra
    hopf: HomHopfAlgebra
    lam: Tensor3

    def __post_init__(self) -> None:
        self.algebra.field.check_same(self.hopf.field)
        dims = (self.algebra.dim, self.hopf.dim, self.algebra.dim)
        if self.lam.dims != dims:
            raise ShapeMismatch(f"coaction tensor {self.lam.dims}, expected {dims}")

    def coact(self, v: Vector) -> Vector:
        return self.lam.linear(v)


def verify_comodule_algebra(C: ComoduleAlgebra) -> Report:
    """Right comodule axioms, and ρ is a unital algebra map into B⊗H."""
    B, H = C.algebra, C.hopf
    nB, nH, fld = B.dim, H.dim, B.field
    R = coaction_matrix(C.rho)
    counit_row = Matrix(fld, 1, nH, H.counit)
    eps = Matrix.identity(fld, nB).kron(counit_row)
    twist = B.alpha.kron(H.alpha)
    left_co = R.kron(H.alpha)
    right_co = B.alpha.kron(_comul_matrix(H))

    checks = [
        (
            "coaction_counit",
            lambda: identity_entry(
                "coaction_counit", fld, (nB,),
                lambda b: eps.apply(R.column(b)),
                lambda b: B.twist_basis(1, b),
            ),
        ),
        (
            "coaction_alpha",
            lambda: identity_entry(
                "coaction_alpha", fld, (nB,),
                lambda b: twist.apply(R.column(b)),
                lambda b: C.coact(B.twist_basis(1, b)),
            ),
        ),
        (
            "coaction_coassociative",
            lambda: identity_entry(
                "coaction_coassociative", fld, (nB,),
                lambda b: left_co.apply(R.column(b)),
                lambda b: right_co.apply(R.column(b)),
            ),
        ),
        (
            "coaction_multiplicative",
            lambda: identity_entry(
                "coaction_multiplicative", fld, (nB, nB),
                lambda b, c: C.coact(B.product(B.e(b), B.e(c))),
                lambda b, c: tensor_vectors(B, H, R.column(b), R.column(c)),
            ),
        ),
        (
            "coaction_unit",
            lambda: identity_entry(
                "coaction_unit", fld, (),
                lambda: C.coact(B.unit),
                lambda: outer(B.unit, H.unit),
            ),
        ),
    ]
    return run_checks(f"{B.name}:comodule_algebra", checks)


def verify_left_comodule_algebra(C: LeftComoduleAlgebra) -> Report:
    """Left comodule axioms, and λ is a unital algebra map into H⊗B."""
    B, H = C.algebra, C.hopf
    nB, nH, fld = B.dim, H.dim, B.field
    L = coaction_matrix(C.lam)
    eps = Matrix(fld, 1, nH, H.counit).kron(Matrix.identity(fld, nB))
    twist = H.alpha.kron(B.alpha)
    left_co = _comul_matrix(H).kron(B.alpha)
    right_co = H.alpha.kron(L)

    checks = [
        (
            "coaction_counit",
            lambda: identity_entry(
                "coaction_counit", fld, (nB,),
                lambda b: eps.apply(L.column(b)),
                lambda b: B.twist_basis(1, b),
            ),
        ),
        (
            "coaction_alpha",
            lambda: identity_entry(
                "coaction_alpha", fld, (nB,),
                lambda b: twist.apply(L.column(b)),
                lambda b: C.coact(B.twist_basis(1, b)),
            ),
        ),
        (
            "coaction_coassociative",
            lambda: identity_entry(
                "coaction_coassociative", fld, (nB,),
                lambda b: right_co.apply(L.column(b)),
                lambda b: left_co.apply(L.column(b)),
            ),
        ),
        (
            "coaction_multiplicative",
            lambda: identity_entry(
                "coaction_multiplicative", fld, (nB, nB),
                lambda b, c: C.coact(B.product(B.e(b), B.e(c))),
                lambda b, c: tensor_vectors(H, B, L.column(b), L.column(c)),
            ),
        ),
        (
            "coaction_unit",
            lambda: identity_entry(
                "coaction_unit", fld, (),
                lambda: C.coact(B.unit),
                lambda: outer(H.unit, B.unit),
            ),
        ),
    ]
    return run_checks(f"{B.name}:left_comodule_algebra", checks)


def crossed_coaction(cp: CrossedProduct) -> ComoduleAlgebra:
    """ρ(a#h) = β(a)#h1 ⊗ α⁻¹(h2) on A #σ H."""
    A, H, B = cp.base, cp.hopf, cp.algebra
    nH = H.dim

    def image(x: int) -> Vector:
        p, i = divmod(x, nH)
        return vec_sum(
            B.field, B.dim * nH,
            (
                vec_scale(c, outer(outer(A.twist_basis(1, p), H.e(h1)), H.twist_basis(-1, h2)))
                for (h1, h2), c in H.sweedler(i, SPLIT)
            ),
        )

    rho = Tensor3.from_images(B.field, (B.dim, B.dim, nH), image)
    return ComoduleAlgebra(B, H, rho)


# =============================================================================
# COINVARIANTS
# =============================================================================


@dataclass(frozen=True)
class CoinvariantSubalgebra:
    """B^coH = {b : ρ(b) = β(b)⊗1} with its induced Hom-algebra structure."""

    inclusion: Matrix
    algebra: HomAlgebra
    ambient: AnyAlgebra

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    def embed(self, v: Vector) -> Vector:
        return self.inclusion.apply(v)

    def coordinates(self, b: Vector, what: str = "element") -> Vector:
        """Coordinates of ``b`` in the coinvariant basis.

        Raises:
            NotInA: ``b`` does not lie in the coinvariants.
        """
        try:
            coords, _ = solve_vector(self.inclusion, b)
        except NoSolution:
            raise NotInA(what, tuple(self.ambient.field.format(x) for x in b)) from None
        return coords


def coinvariant_defect(C: ComoduleAlgebra) -> Matrix:
    """Matrix of b ↦ ρ(b) − β(b)⊗1."""
    unit_col = Matrix.from_columns(C.hopf.field, C.hopf.dim, [C.hopf.unit])
    return coaction_matrix(C.rho) - C.algebra.alpha.kron(unit_col)


def coinvariants(C: ComoduleAlgebra) -> CoinvariantSubalgebra:
    """Kernel of ρ − β⊗1 with the induced product, unit and structure map.

    Raises:
        NotClosed: the kernel is not closed under multiplication or β.
    """
    B, fld = C.algebra, C.algebra.field
    basis = kernel(coinvariant_defect(C))
    inclusion = Matrix.from_columns(fld, B.dim, basis)
    k = len(basis)

    def coords(v: Vector, witness: tuple[int, ...]) -> Vector:
        try:
            return solve_vector(inclusion, v)[0]
        except NoSolution:
            raise NotClosed(witness) from None

    fibers = {
        (i, j): coords(B.product(basis[i], basis[j]), (i, j)) for i in range(k) for j in range(k)
    }
    alpha = Matrix.from_columns(fld, k, [coords(B.twist(1, u), (i,)) for i, u in enumerate(basis)])
    unit = coords(B.unit, ())

    def label(u: Vector, idx: int) -> str:
        nz = [p for p, c in enumerate(u) if c]
        if len(nz) == 1 and u[nz[0]] == fld.one:
            return B.labels[nz[0]]
        return f"u{idx}"

    sub = HomAlgebra(
        fld,
        k,
        tuple(label(u, i) for i, u in enumerate(basis)),
        Tensor3.from_bilinear(fld, (k, k, k), lambda i, j: fibers[(i, j)]),
        unit,
        alpha,
        name=f"{B.name}^co",
    )
    logger.debug("coinvariants of %s: dimension %d", B.name, k)
    return CoinvariantSubalgebra(inclusion, sub, B)


# =============================================================================
# CLEFT MAPS
# =============================================================================


@dataclass(frozen=True)
class CleftData:
    gamma: LinMap
    gamma_inverse: LinMap
    normalized: bool


def check_cleft(C: ComoduleAlgebra, gamma: LinMap) -> Report:
    """γ is a convolution-invertible, unital right comodule map H → B."""
    B, H = C.algebra, C.hopf
    nH, fld = H.dim, B.field
    checks = [
        (
            "gamma_comodule_map",
            lambda: identity_entry(
                "gamma_comodule_map", fld, (nH,),
                lambda i: C.coact(gamma.image(i)),
                lambda i: vec_sum(
                    fld, B.dim * nH,
                    (vec_scale(c, outer(gamma.image(h1), H.e(h2))) for (h1, h2), c in H.sweedler(i, SPLIT)),
                ),
            ),
        ),
        (
            "gamma_alpha",
            lambda: identity_entry(
                "gamma_alpha", fld, (nH,),
                lambda i: gamma(H.twist_basis(1, i)),
                lambda i: B.twist(1, gamma.image(i)),
            ),
        ),
        (
            "gamma_invertible",
            lambda: ReportEntry.verdict(
                "gamma_invertible", is_conv_invertible(H, B, gamma), "no two-sided convolution inverse"
            ),
        ),
        (
            "gamma_unit",
            lambda: identity_entry("gamma_unit", fld, (), lambda: gamma(H.unit), lambda: B.unit),
        ),
    ]
    return run_checks(f"{B.name}:cleft", checks)


def normalize_gamma(C: ComoduleAlgebra, gamma: LinMap) -> tuple[LinMap, bool]:
    """Rescale γ so that γ(1) = 1.

    Returns the map and whether it had to change. With u solving
    γ(1)·u = 1 the new map is h ↦ β⁻¹(γ(h)·u).

    Raises:
        PreconditionFailed: γ(1) has no right inverse in B.
    """
    B, H = C.algebra, C.hopf
    g1 = gamma(H.unit)
    if g1 == B.unit:
        return gamma, False
    try:
        u, _ = solve_vector(B.left_mult(g1), B.unit)
    except NoSolution:
        raise PreconditionFailed("gamma(1) is not invertible in B; gamma cannot be normalized") from None
    cols = [B.twist(-1, B.product(gamma.image(i), u)) for i in range(H.dim)]
    logger.info("normalized gamma: gamma(1) rescaled to the unit of %s", B.name)
    return LinMap(Matrix.from_columns(B.field, B.dim, cols), gamma.source, gamma.target), True


def gamma_inv_coaction_check(C: ComoduleAlgebra, gamma: LinMap) -> Report:
    """ρ(γ⁻¹(h)) = γ⁻¹(h2) ⊗ S(h1).

    Raises:
        NotInvertible: γ has no convolution inverse.
    """
    B, H = C.algebra, C.hopf
    fld = B.field
    inv = conv_invert(H, B, gamma)
    S = H.antipode
    entry = (
        "gamma_inverse_coaction",
        lambda: identity_entry(
            "gamma_inverse_coaction", fld, (H.dim,),
            lambda i: C.coact(inv.image(i)),
            lambda i: vec_sum(
                fld, B.dim * H.dim,
                (vec_scale(c, outer(inv.image(h2), S.column(h1))) for (h1, h2), c in H.sweedler(i, SPLIT)),
            ),
        ),
    )
    return run_checks(f"{B.name}:gamma_inverse", [entry])


def _project(C: ComoduleAlgebra, gamma_inverse: LinMap, b: Vector) -> Vector:
    B, nH = C.algebra, C.hopf.dim
    flat = C.coact(b)
    return vec_sum(
        B.field, B.dim,
        (
            vec_scale(c, B.product(B.e(x // nH), gamma_inverse.image(x % nH)))
            for x, c in enumerate(flat)
            if c
        ),
    )


def project_to_coinvariants(C: ComoduleAlgebra, gamma: LinMap, b: Vector) -> Vector:
    """b(0) γ⁻¹(b(1)), which always lies in the coinvariants.

    On an element already coinvariant this is β²(b).

    Raises:
        NotInA: the result is not coinvariant.
        NotInvertible: γ has no convolution inverse.
    """
    out = _project(C, conv_invert(C.hopf, C.algebra, gamma), b)
    if any(comodule_defect(C, out)):
        raise NotInA("b(0) gamma^-1(b(1))", tuple(C.algebra.field.format(x) for x in out))
    return out


# =============================================================================
# CLEFT EXTENSIONS <-> CROSSED PRODUCTS
# =============================================================================


@dataclass(frozen=True)
class CrossedData:
    """Crossed-product data recovered from a cleft extension, with Φ: A⊗H → B and Ψ = Φ⁻¹."""

    action: WeakAction
    cocycle: CocycleMap
    coinvariant: CoinvariantSubalgebra
    phi: LinMap
    psi: LinMap


def extract_crossed_data(C: ComoduleAlgebra, cleft: CleftData) -> CrossedData:
    """Recover the action, the cocycle and the isomorphism B ≅ A #σ H.

    h·a = (γ(α⁻²(h1)) β⁻¹(a)) γ⁻¹(α⁻¹(h2)) and
    σ(h, g) = (γ(α⁻³(h1)) γ(α⁻³(g1))) γ⁻¹(α⁻³(h2 g2)).

    Raises:
        NotInA: an action or cocycle value escapes the coinvariants.
        NotClosed: the coinvariants are not a subalgebra.
    """
    B, H = C.algebra, C.hopf
    gamma, gamma_inv = cleft.gamma, cleft.gamma_inverse
    sub = coinvariants(C)
    A = sub.algebra
    nA, nH, fld = A.dim, H.dim, B.field

    def act_fiber(i: int, p: int) -> Vector:
        a = B.twist(-1, sub.inclusion.column(p))
        value = vec_sum(
            fld, B.dim,
            (
                vec_scale(c, B.product(B.product(gamma(H.twist_basis(-2, h1)), a), gamma_inv(H.twist_basis(-1, h2))))
                for (h1, h2), c in H.sweedler(i, SPLIT)
            ),
        )
        return sub.coordinates(value, "action")

    def sigma_fiber(i: int, j: int) -> Vector:
        value = vec_sum(
            fld, B.dim,
            (
                vec_scale(
                    c * d,
                    B.product(
                        B.product(gamma(H.twist_basis(-3, h1)), gamma(H.twist_basis(-3, g1))),
                        gamma_inv(H.twist(-3, H.product(H.e(h2), H.e(g2)))),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (g1, g2), d in H.sweedler(j, SPLIT)
            ),
        )
        return sub.coordinates(value, "cocycle")

    action = WeakAction(H, A, Tensor3.from_bilinear(fld, (nH, nA, nA), act_fiber))
    cocycle = CocycleMap(H, A, Tensor3.from_bilinear(fld, (nH, nH, nA), sigma_fiber))

    # Φ(a#h) = β⁻²(a) γ(α⁻²(h))
    phi_cols = [
        B.product(B.twist(-2, sub.inclusion.column(x // nH)), gamma(H.twist_basis(-2, x % nH)))
        for x in range(nA * nH)
    ]
    phi = LinMap(Matrix.from_columns(fld, B.dim, phi_cols), f"{A.name}#{H.name}", B.name)

    # Ψ(b) = β⁻²(b(0)(0) γ⁻¹(b(0)(1))) # b(1)
    def psi_col(b: int) -> Vector:
        out = [fld.zero] * (nA * nH)
        for x, c in enumerate(C.coact(B.e(b))):
            if not c:
                continue
            y, k = divmod(x, nH)
            inner = B.twist(-2, vec_scale(c, _project(C, gamma_inv, B.e(y))))
            coords = sub.coordinates(inner, "psi")
            for q, v in enumerate(coords):
                if v:
                    out[q * nH + k] += v
        return tuple(out)

    psi = LinMap(
        Matrix.from_columns(fld, nA * nH, [psi_col(b) for b in range(B.dim)]),
        B.name,
        f"{A.name}#{H.name}",
    )
    return CrossedData(action, cocycle, sub, phi, psi)


def gamma_from_crossed(cp: CrossedProduct) -> CleftData:
    """γ(h) = 1#α(h) with inverse λ(h) = σ⁻¹(S(α⁻¹(h21)), α⁻¹(h22)) # S(h1).

    Raises:
        NotInvertible: σ has no convolution inverse, or λ fails to invert γ.
    """
    A, H, B = cp.base, cp.hopf, cp.algebra
    fld, nH = B.field, H.dim
    sigma_inv = cp.cocycle.inverse
    S = H.antipode
    gamma = LinMap(
        Matrix.from_columns(fld, B.dim, [outer(A.unit, H.twist_basis(1, i)) for i in range(nH)]),
        H.name,
        B.name,
    )
    lam_cols = [
        vec_sum(
            fld, B.dim,
            (
                vec_scale(
                    c,
                    outer(
                        sigma_inv(S.apply(H.twist_basis(-1, h21)), H.twist_basis(-1, h22)),
                        S.column(h1),
                    ),
                )
                for (h1, h21, h22), c in H.sweedler(i, SPLIT_RIGHT)
            ),
        )
        for i in range(nH)
    ]
    lam = LinMap(Matrix.from_columns(fld, B.dim, lam_cols), H.name, B.name)
    unit = convolution_unit(H, B).matrix
    right = convolve(H, B, gamma, lam).matrix == unit
    left = convolve(H, B, lam, gamma).matrix == unit
    if not (left and right):
        reason = InvertibilityFailure.ONE_SIDED if (left or right) else InvertibilityFailure.NONE
        raise NotInvertible(reason, "lambda does not invert gamma")
    return CleftData(gamma, lam, normalized=gamma(H.unit) == B.unit)


def _phi_checks(
    B: AnyAlgebra, C: ComoduleAlgebra, data: CrossedData, rebuilt: CrossedProduct
) -> list[ReportEntry]:
    """Φ as a left A-module map, a right H-comodule map and on A⊗1.

    a·(b#h) = β(a)b#α(h) on A #σ H and a·x = ax in B; the coaction on
    A #σ H is the crossed one. Φ(a#1) = β⁻¹(a), the inclusion when β = id.
    """
    A, H = data.coinvariant.algebra, rebuilt.hopf
    nA, nH, fld = A.dim, H.dim, B.field
    phi, inclusion = data.phi.matrix, data.coinvariant.inclusion
    rho_cp = crossed_coaction(rebuilt)

    def module_lhs(p: int, x: int) -> Vector:
        q, h = divmod(x, nH)
        return phi.apply(outer(A.product(A.twist_basis(1, p), A.e(q)), H.twist_basis(1, h)))

    def comodule_rhs(x: int) -> Vector:
        return vec_sum(
            fld, B.dim * nH,
            (
                vec_scale(c, outer(phi.column(y // nH), H.e(y % nH)))
                for y, c in enumerate(rho_cp.rho.image(x))
                if c
            ),
        )

    return [
        identity_entry(
            "phi_module_map", fld, (nA, nA * nH),
            module_lhs,
            lambda p, x: B.product(inclusion.column(p), phi.column(x)),
        ),
        identity_entry(
            "phi_comodule_map", fld, (nA * nH,),
            lambda x: C.coact(phi.column(x)),
            comodule_rhs,
        ),
        identity_entry(
            "phi_restricts_to_inclusion", fld, (nA,),
            lambda p: phi.apply(outer(A.e(p), H.unit)),
            lambda p: B.twist(-1, inclusion.column(p)),
        ),
    ]


def cleft_roundtrip(action: WeakAction, cocycle: CocycleMap) -> Report:
    """Crossed product → cleft extension → crossed product, compared through Φ.

    Raises:
        ConditionsFailed: the input data do not define a crossed product.
    """
    cp = build_crossed_product(action, cocycle)
    C = crossed_coaction(cp)
    cleft = gamma_from_crossed(cp)
    data = extract_crossed_data(C, cleft)
    B = cp.algebra
    rebuilt_cp = build_crossed_product(data.action, data.cocycle, enforce=False)
    rebuilt = rebuilt_cp.algebra
    phi, psi = data.phi.matrix, data.psi.matrix
    fld = B.field
    recovered = crossed_product_conditions(data.action, data.cocycle)

    entries = [
        ReportEntry.verdict("comodule_algebra", verify_comodule_algebra(C).passed),
        ReportEntry.verdict("cleft", check_cleft(C, cleft.gamma).passed),
        ReportEntry.verdict(
            "coinvariant_dimension",
            data.coinvariant.dim == action.algebra.dim,
            f"{data.coinvariant.dim} != {action.algebra.dim}",
        ),
        ReportEntry.verdict("phi_psi_inverse", (phi @ psi).is_identity()),
        ReportEntry.verdict("psi_phi_inverse", (psi @ phi).is_identity()),
        identity_entry(
            "phi_multiplicative", fld, (rebuilt.dim, rebuilt.dim),
            lambda x, y: phi.apply(rebuilt.product(rebuilt.e(x), rebuilt.e(y))),
            lambda x, y: B.product(phi.column(x), phi.column(y)),
        ),
        identity_entry(
            "phi_alpha", fld, (rebuilt.dim,),
            lambda x: phi.apply(rebuilt.twist_basis(1, x)),
            lambda x: B.twist(1, phi.column(x)),
        ),
        *_phi_checks(B, C, data, rebuilt_cp),
        ReportEntry.verdict(
            "recovered_conditions",
            all(r.passed for r in recovered),
            ", ".join(a for r in recovered for a in r.failed_axioms),
        ),
    ]
    report = Report(f"{B.name}:cleft_roundtrip", tuple(entries))
    logger.info(
        "CLEFT_ROUNDTRIP: subject=%s | passed=%s | coinvariant_dim=%d",
        B.name,
        report.passed,
        data.coinvariant.dim,
    )
    return report


def comodule_defect(C: ComoduleAlgebra, b: Vector) -> Vector:
    """ρ(b) − β(b)⊗1, zero exactly on coinvariants."""
    return vec_sub(C.coact(b), outer(C.algebra.twist(1, b), C.hopf.unit))


__all__ = [
    "CleftData",
    "CoinvariantSubalgebra",
    "ComoduleAlgebra",
    "CrossedData",
    "LeftComoduleAlgebra",
    "check_cleft",
    "cleft_roundtrip",
    "coaction_matrix",
    "coinvariants",
    "comodule_defect",
    "crossed_coaction",
    "extract_crossed_data",
    "gamma_from_crossed",
    "gamma_inv_coaction_check",
    "normalize_gamma",
    "project_to_coinvariants",
    "verify_comodule_algebra",
    "verify_left_comodule_algebra",
]
