"""Smash coproducts and crossed products that are Hom-bialgebras or Hom-Hopf algebras.

The base A carries both a Hom-algebra and a Hom-coalgebra structure (a
``HomBialgebra`` without the compatibility) and a left H-coaction
λ: A → H⊗A, stored with flat index ``h * dim(A) + a``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from errors import ConditionsFailed, PreconditionFailed, ShapeMismatch
from exactlin import Matrix, Tensor3, Vector, outer, vec_scale, vec_sum
from models import Report, ReportEntry, StructureKind
from structures.cleft import coaction_matrix
from structures.crossed import (
    CocycleMap,
    CrossedProduct,
    WeakAction,
    build_crossed_product,
    crossed_product_conditions,
)
from structures.homcore import (
    SPLIT,
    SPLIT_LEFT,
    AnyCoalgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopfAlgebra,
    LinMap,
    combine_entries,
    conv_invert,
    convolution_unit,
    convolve,
    identity_entry,
    run_checks,
    tensor_vectors,
    verify,
)

logger = logging.getLogger("homkit")


@dataclass(frozen=True)
class ComoduleCoalgebra:
    """Left Hom-comodule coalgebra (C, λ) over H."""

    coalgebra: AnyCoalgebra
    hopf: HomHopfAlgebra
    lam: Tensor3

    def __post_init__(self) -> None:
        self.coalgebra.field.check_same(self.hopf.field)
        dims = (self.coalgebra.dim, self.hopf.dim, self.coalgebra.dim)
        if self.lam.dims != dims:
            raise ShapeMismatch(f"coaction tensor {self.lam.dims}, expected {dims}")

    def coact(self, v: Vector) -> Vector:
        return self.lam.linear(v)

    def terms(self, c: int) -> tuple[tuple[int, int, object], ...]:
        """Nonzero (h, c', coefficient) with λ(e_c) = Σ coefficient e_h ⊗ e_c'."""
        return self.lam.terms(c)

    @classmethod
    def trivial(cls, C: AnyCoalgebra, H: HomHopfAlgebra) -> ComoduleCoalgebra:
        """λ(c) = 1 ⊗ γ(c)."""
        n = C.dim
        return cls(
            C, H, Tensor3.from_images(C.field, (n, H.dim, n), lambda c: outer(H.unit, C.twist_basis(1, c)))
        )


@dataclass(frozen=True)
class Biproduct:
    """A #σ H with the crossed multiplication and the smash comultiplication."""

    bialgebra: HomBialgebra
    crossed: CrossedProduct
    coaction: ComoduleCoalgebra
    cocycle: CocycleMap


def _require_base(A: object) -> HomBialgebra:
    if not isinstance(A, HomBialgebra):
        raise ShapeMismatch("the base needs both an algebra and a coalgebra structure")
    return A


# =============================================================================
# COMODULE COALGEBRAS AND SMASH COPRODUCTS
# =============================================================================


def check_comodule_coalgebra(C: ComoduleCoalgebra) -> Report:
    """Left comodule laws plus compatibility of λ with Δ_C and ε_C."""
    D, H = C.coalgebra, C.hopf
    n, nH, fld = D.dim, H.dim, D.field
    L = coaction_matrix(C.lam)
    eps = Matrix(fld, 1, nH, H.counit).kron(Matrix.identity(fld, n))
    twist = H.alpha.kron(D.alpha)
    alpha_lam = H.alpha.kron(L)
    comul_beta = coaction_matrix(H.comul).kron(D.alpha)
    alpha2_comul = H.alpha_pow(2).kron(coaction_matrix(D.comul))

    def split_coaction(c: int) -> Vector:
        # c1(-1) c2(-1) ⊗ c1(0) ⊗ c2(0)
        out = [fld.zero] * (nH * n * n)
        for c1, c2, x in D.comul.terms(c):
            for h, d, y in C.terms(c1):
                for k, e, z in C.terms(c2):
                    hk = H.product(H.e(h), H.e(k))
                    w = x * y * z
                    for m, v in enumerate(hk):
                        if v:
                            out[(m * n + d) * n + e] += w * v
        return tuple(out)

    checks = [
        (
            "coaction_counit",
            lambda: identity_entry(
                "coaction_counit", fld, (n,),
                lambda c: eps.apply(L.column(c)),
                lambda c: D.twist_basis(1, c),
            ),
        ),
        (
            "coaction_alpha",
            lambda: identity_entry(
                "coaction_alpha", fld, (n,),
                lambda c: twist.apply(L.column(c)),
                lambda c: C.coact(D.twist_basis(1, c)),
            ),
        ),
        (
            "coaction_coassociative",
            lambda: identity_entry(
                "coaction_coassociative", fld, (n,),
                lambda c: alpha_lam.apply(L.column(c)),
                lambda c: comul_beta.apply(L.column(c)),
            ),
        ),
        (
            "comodule_coalgebra_comul",
            lambda: identity_entry(
                "comodule_coalgebra_comul", fld, (n,),
                lambda c: alpha2_comul.apply(L.column(c)),
                split_coaction,
            ),
        ),
        (
            "comodule_coalgebra_counit",
            lambda: identity_entry(
                "comodule_coalgebra_counit", fld, (n,),
                lambda c: vec_sum(fld, nH, (vec_scale(y * D.counit[d], H.e(h)) for h, d, y in C.terms(c))),
                lambda c: vec_scale(D.counit[c], H.unit),
            ),
        ),
    ]
    return run_checks(f"{D.name}:comodule_coalgebra", checks)


def smash_comultiplication(C: ComoduleCoalgebra) -> Tensor3:
    """Δ(c×h) = c1 × α⁻²(c2(-1)) α⁻¹(h1) ⊗ γ⁻¹(c2(0)) × h2."""
    D, H = C.coalgebra, C.hopf
    nH, fld = H.dim, D.field
    n = D.dim * nH

    def image(x: int) -> Vector:
        c, i = divmod(x, nH)
        parts = []
        for c1, c2, a in D.comul.terms(c):
            for k, y, b in C.terms(c2):
                right_c = D.twist_basis(-1, y)
                for (h1, h2), d in H.sweedler(i, SPLIT):
                    left_h = H.product(H.twist_basis(-2, k), H.twist_basis(-1, h1))
                    parts.append(vec_scale(a * b * d, outer(outer(D.e(c1), left_h), outer(right_c, H.e(h2)))))
        return vec_sum(fld, n * n, parts)

    return Tensor3.from_images(fld, (n, n, n), image)


def build_smash_coproduct(C: ComoduleCoalgebra, *, enforce: bool = True) -> HomCoalgebra:
    """The Hom-coalgebra C × H with structure map γ⊗α.

    Raises:
        ConditionsFailed: (C, λ) is not a comodule coalgebra.
    """
    if enforce:
        report = check_comodule_coalgebra(C)
        if not report.passed:
            raise ConditionsFailed("smash coproduct", [report])
    D, H = C.coalgebra, C.hopf
    return HomCoalgebra(
        D.field,
        D.dim * H.dim,
        tuple(f"{c}×{h}" for c in D.labels for h in H.labels),
        smash_comultiplication(C),
        outer(D.counit, H.counit),
        D.alpha.kron(H.alpha),
        name=f"{D.name}×{H.name}",
    )


# =============================================================================
# BIALGEBRA CONDITIONS
# =============================================================================


def check_twisted_comodule_cocycle(cocycle: CocycleMap, comodule: ComoduleCoalgebra) -> Report:
    """σ against the coaction, in the three-factor form and the four-factor form.

    three-factor: β(a1) ⊗ α⁻¹(a2(-1))α(g) ⊗ a2(0)
                  = a1 σ(α⁻²(a2(-1)1), g1) ⊗ α⁻²(a2(-1)2) g2 ⊗ a2(0)
    four-factor:  a1 σ(α⁻²(a2(-1)1), α⁻¹(g11)) ⊗ α⁻²(a2(-1)2) α⁻¹(g12) ⊗ a2(0) ⊗ α(g2)
                  = β(a1) ⊗ α⁻¹(a2(-1)) g1 ⊗ a2(0) ⊗ α(g2)
    """
    A = _require_base(cocycle.algebra)
    H, sigma = cocycle.hopf, cocycle
    nA, nH, fld = A.dim, H.dim, A.field

    def tail(p: int):
        """(a1, a2(-1), a2(0), coefficient) terms."""
        for a1, a2, x in A.comul.terms(p):
            for k, a20, y in comodule.terms(a2):
                yield a1, k, a20, x * y

    def printed_lhs(p: int, j: int) -> Vector:
        return vec_sum(
            fld, nA * nH * nA,
            (
                vec_scale(
                    c,
                    outer(outer(A.twist_basis(1, a1), H.product(H.twist_basis(-1, k), H.twist_basis(1, j))), A.e(a20)),
                )
                for a1, k, a20, c in tail(p)
            ),
        )

    def printed_rhs(p: int, j: int) -> Vector:
        parts = []
        for a1, k, a20, c in tail(p):
            for (k1, k2), d in H.sweedler(k, SPLIT):
                for (g1, g2), f in H.sweedler(j, SPLIT):
                    left = A.product(A.e(a1), sigma(H.twist_basis(-2, k1), H.e(g1)))
                    mid = H.product(H.twist_basis(-2, k2), H.e(g2))
                    parts.append(vec_scale(c * d * f, outer(outer(left, mid), A.e(a20))))
        return vec_sum(fld, nA * nH * nA, parts)

    size4 = nA * nH * nA * nH

    def four_lhs(p: int, j: int) -> Vector:
        parts = []
        for a1, k, a20, c in tail(p):
            for (k1, k2), d in H.sweedler(k, SPLIT):
                for (g11, g12, g2), f in H.sweedler(j, SPLIT_LEFT):
                    left = A.product(A.e(a1), sigma(H.twist_basis(-2, k1), H.twist_basis(-1, g11)))
                    mid = H.product(H.twist_basis(-2, k2), H.twist_basis(-1, g12))
                    parts.append(
                        vec_scale(c * d * f, outer(outer(outer(left, mid), A.e(a20)), H.twist_basis(1, g2)))
                    )
        return vec_sum(fld, size4, parts)

    def four_rhs(p: int, j: int) -> Vector:
        parts = []
        for a1, k, a20, c in tail(p):
            for (g1, g2), f in H.sweedler(j, SPLIT):
                mid = H.product(H.twist_basis(-1, k), H.e(g1))
                parts.append(
                    vec_scale(c * f, outer(outer(outer(A.twist_basis(1, a1), mid), A.e(a20)), H.twist_basis(1, g2)))
                )
        return vec_sum(fld, size4, parts)

    checks = [
        (
            "twisted_comodule_cocycle",
            lambda: identity_entry("twisted_comodule_cocycle", fld, (nA, nH), printed_lhs, printed_rhs),
        ),
        (
            "twisted_comodule_cocycle_four_factor",
            lambda: identity_entry("twisted_comodule_cocycle_four_factor", fld, (nA, nH), four_lhs, four_rhs),
        ),
    ]
    return run_checks(f"{A.name}:twisted_comodule_cocycle", checks)


BIPRODUCT_CONDITIONS = (
    "counit_algebra_map",
    "counit_action",
    "sigma_coalgebra_map",
    "comul_action",
    "coaction_action",
    "comul_product",
    "coaction_sigma",
    "comul_unit",
    "coaction_algebra_map",
)


def check_biproduct_conditions(
    action: WeakAction, cocycle: CocycleMap, comodule: ComoduleCoalgebra
) -> Report:
    """The nine conditions under which A #σ H with the smash coproduct is a Hom-bialgebra.

    Entries follow ``BIPRODUCT_CONDITIONS``. Where the action conditions name
    b the element a is meant; the report notes this reading.
    """
    A = _require_base(action.algebra)
    H, act, sigma = action.hopf, action.apply, cocycle
    nA, nH, fld = A.dim, H.dim, A.field

    def eps(v: Vector):
        return A.counit_of(v)

    def coact_terms(v: Vector):
        """(h, a, coefficient) terms of λ(v)."""
        flat = comodule.coact(v)
        for x, c in enumerate(flat):
            if c:
                yield x // nA, x % nA, c

    # counit_algebra_map
    def counit_algebra_map() -> ReportEntry:
        return combine_entries(
            "counit_algebra_map",
            identity_entry(
                "multiplicative", fld, (nA, nA),
                lambda p, q: (eps(A.product(A.e(p), A.e(q))),),
                lambda p, q: (A.counit[p] * A.counit[q],),
            ),
            identity_entry("unit", fld, (), lambda: (eps(A.unit),), lambda: (fld.one,)),
            identity_entry(
                "alpha", fld, (nA,), lambda p: (eps(A.twist_basis(1, p)),), lambda p: (A.counit[p],)
            ),
        )

    def counit_action() -> ReportEntry:
        return identity_entry(
            "counit_action", fld, (nH, nA),
            lambda i, p: (eps(act(H.e(i), A.e(p))),),
            lambda i, p: (H.counit[i] * A.counit[p],),
        )

    def sigma_coalgebra_map() -> ReportEntry:
        def split_sigma(i: int, j: int) -> Vector:
            return vec_sum(
                fld, nA * nA,
                (
                    vec_scale(c * d, outer(sigma(H.e(h1), H.e(g1)), sigma(H.e(h2), H.e(g2))))
                    for (h1, h2), c in H.sweedler(i, SPLIT)
                    for (g1, g2), d in H.sweedler(j, SPLIT)
                ),
            )

        return combine_entries(
            "sigma_coalgebra_map",
            identity_entry(
                "comultiplicative", fld, (nH, nH),
                lambda i, j: A.coproduct(sigma(H.e(i), H.e(j))),
                split_sigma,
            ),
            identity_entry(
                "counital", fld, (nH, nH),
                lambda i, j: (eps(sigma(H.e(i), H.e(j))),),
                lambda i, j: (H.counit[i] * H.counit[j],),
            ),
        )

    def comul_action() -> ReportEntry:
        # Δ_A(h·a) = (α⁻²(h11)·β⁻¹(a1)) σ(α⁻¹(h12), α⁻¹(a2(-1))) ⊗ h2·β⁻¹(a2(0))
        def rhs(i: int, p: int) -> Vector:
            parts = []
            for (h11, h12, h2), c in H.sweedler(i, SPLIT_LEFT):
                for a1, a2, d in A.comul.terms(p):
                    left_act = act(H.twist_basis(-2, h11), A.twist_basis(-1, a1))
                    for k, a20, f in comodule.terms(a2):
                        left = A.product(left_act, sigma(H.twist_basis(-1, h12), H.twist_basis(-1, k)))
                        right = act(H.e(h2), A.twist_basis(-1, a20))
                        parts.append(vec_scale(c * d * f, outer(left, right)))
            return vec_sum(fld, nA * nA, parts)

        return identity_entry(
            "comul_action", fld, (nH, nA),
            lambda i, p: A.coproduct(act(H.e(i), A.e(p))),
            rhs,
        )

    def coaction_action() -> ReportEntry:
        # (α⁻¹(h1)·a)(-1) α(h2) ⊗ (α⁻¹(h1)·a)(0) = α(h1 a(-1)) ⊗ h2·a(0)
        def lhs(i: int, p: int) -> Vector:
            parts = []
            for (h1, h2), c in H.sweedler(i, SPLIT):
                moved = act(H.twist_basis(-1, h1), A.e(p))
                for k, q, d in coact_terms(moved):
                    parts.append(vec_scale(c * d, outer(H.product(H.e(k), H.twist_basis(1, h2)), A.e(q))))
            return vec_sum(fld, nH * nA, parts)

        def rhs(i: int, p: int) -> Vector:
            return vec_sum(
                fld, nH * nA,
                (
                    vec_scale(c * d, outer(H.twist(1, H.product(H.e(h1), H.e(k))), act(H.e(h2), A.e(q))))
                    for (h1, h2), c in H.sweedler(i, SPLIT)
                    for k, q, d in comodule.terms(p)
                ),
            )

        return identity_entry("coaction_action", fld, (nH, nA), lhs, rhs)

    def comul_product() -> ReportEntry:
        # Δ_A(ab) = a1[(α⁻⁴(a2(-1)1)·β⁻²(b1)) σ(α⁻³(a2(-1)2), α⁻²(b2(-1)))] ⊗ β⁻¹(a2(0) b2(0))
        def rhs(p: int, q: int) -> Vector:
            parts = []
            for a1, a2, c in A.comul.terms(p):
                for k, a20, d in comodule.terms(a2):
                    for (k1, k2), f in H.sweedler(k, SPLIT):
                        for b1, b2, u in A.comul.terms(q):
                            moved = act(H.twist_basis(-4, k1), A.twist_basis(-2, b1))
                            for m, b20, v in comodule.terms(b2):
                                s = sigma(H.twist_basis(-3, k2), H.twist_basis(-2, m))
                                left = A.product(A.e(a1), A.product(moved, s))
                                right = A.twist(-1, A.product(A.e(a20), A.e(b20)))
                                parts.append(vec_scale(c * d * f * u * v, outer(left, right)))
            return vec_sum(fld, nA * nA, parts)

        return identity_entry(
            "comul_product", fld, (nA, nA),
            lambda p, q: A.coproduct(A.product(A.e(p), A.e(q))),
            rhs,
        )

    def coaction_sigma() -> ReportEntry:
        # σ(h1, g1)(-1) (h2 g2) ⊗ σ(h1, g1)(0) = α(h1 g1) ⊗ σ(α(h2), α(g2))
        def lhs(i: int, j: int) -> Vector:
            parts = []
            for (h1, h2), c in H.sweedler(i, SPLIT):
                for (g1, g2), d in H.sweedler(j, SPLIT):
                    hg = H.product(H.e(h2), H.e(g2))
                    for k, q, f in coact_terms(sigma(H.e(h1), H.e(g1))):
                        parts.append(vec_scale(c * d * f, outer(H.product(H.e(k), hg), A.e(q))))
            return vec_sum(fld, nH * nA, parts)

        def rhs(i: int, j: int) -> Vector:
            return vec_sum(
                fld, nH * nA,
                (
                    vec_scale(
                        c * d,
                        outer(
                            H.twist(1, H.product(H.e(h1), H.e(g1))),
                            sigma(H.twist_basis(1, h2), H.twist_basis(1, g2)),
                        ),
                    )
                    for (h1, h2), c in H.sweedler(i, SPLIT)
                    for (g1, g2), d in H.sweedler(j, SPLIT)
                ),
            )

        return identity_entry("coaction_sigma", fld, (nH, nH), lhs, rhs)

    def comul_unit() -> ReportEntry:
        return identity_entry(
            "comul_unit", fld, (), lambda: A.coproduct(A.unit), lambda: outer(A.unit, A.unit)
        )

    def coaction_algebra_map() -> ReportEntry:
        L = coaction_matrix(comodule.lam)
        return combine_entries(
            "coaction_algebra_map",
            identity_entry(
                "multiplicative", fld, (nA, nA),
                lambda p, q: comodule.coact(A.product(A.e(p), A.e(q))),
                lambda p, q: tensor_vectors(H, A, L.column(p), L.column(q)),
            ),
            identity_entry(
                "unit", fld, (), lambda: comodule.coact(A.unit), lambda: outer(H.unit, A.unit)
            ),
        )

    builders = (
        counit_algebra_map,
        counit_action,
        sigma_coalgebra_map,
        comul_action,
        coaction_action,
        comul_product,
        coaction_sigma,
        comul_unit,
        coaction_algebra_map,
    )
    checks = list(zip(BIPRODUCT_CONDITIONS, builders))
    return run_checks(
        f"{A.name}#{H.name}:biproduct_conditions",
        checks,
        notes=("action conditions read with a in place of the printed b",),
    )


def assemble_bialgebra(
    action: WeakAction,
    cocycle: CocycleMap,
    comodule: ComoduleCoalgebra,
    *,
    enforce: bool = True,
) -> Biproduct:
    """Crossed multiplication plus smash comultiplication on A ⊗ H.

    Raises:
        ConditionsFailed: a crossed-product, comodule-coalgebra or
            bialgebra condition fails and ``enforce`` is set.
    """
    A = _require_base(action.algebra)
    H = action.hopf
    if enforce:
        reports = [
            *crossed_product_conditions(action, cocycle),
            check_comodule_coalgebra(comodule),
            check_twisted_comodule_cocycle(cocycle, comodule),
            check_biproduct_conditions(action, cocycle, comodule),
        ]
        if not all(r.passed for r in reports):
            raise ConditionsFailed("biproduct", reports)
    cp = build_crossed_product(action, cocycle, enforce=False)
    carrier = cp.algebra
    bialgebra = HomBialgebra(
        A.field,
        carrier.dim,
        carrier.labels,
        carrier.mul,
        carrier.unit,
        smash_comultiplication(comodule),
        outer(A.counit, H.counit),
        carrier.alpha,
        name=carrier.name,
    )
    return Biproduct(bialgebra, cp, comodule, cocycle)


# =============================================================================
# ANTIPODES
# =============================================================================


def _sigma_times_mult(cocycle: CocycleMap, u: Vector, v: Vector) -> Vector:
    """(σ ⊗ m_H) Δ_{H⊗H}(u ⊗ v) = σ(u1, v1) ⊗ u2 v2."""
    H, A = cocycle.hopf, cocycle.algebra
    n = H.dim
    du, dv = H.coproduct(u), H.coproduct(v)
    parts = []
    for x, c in enumerate(du):
        if not c:
            continue
        for y, d in enumerate(dv):
            if d:
                u1, u2 = divmod(x, n)
                v1, v2 = divmod(y, n)
                parts.append(vec_scale(c * d, outer(cocycle(H.e(u1), H.e(v1)), H.product(H.e(u2), H.e(v2)))))
    return vec_sum(A.field, A.dim * n, parts)


def check_sigma_antipode(cocycle: CocycleMap, S: Matrix) -> Report:
    """S commutes with α and is a σ-twisted convolution inverse of id on both sides."""
    H, A = cocycle.hopf, cocycle.algebra
    n, fld = H.dim, H.field
    one = outer(A.unit, H.unit)

    def side(i: int, left: bool) -> Vector:
        parts = []
        for (h1, h2), c in H.sweedler(i, SPLIT):
            if left:
                u, v = S.column(h1), H.e(h2)
            else:
                u, v = H.e(h1), S.column(h2)
            parts.append(vec_scale(c, _sigma_times_mult(cocycle, u, v)))
        return vec_sum(fld, A.dim * n, parts)

    checks = [
        (
            "antipode_alpha",
            lambda: identity_entry(
                "antipode_alpha", fld, (n,),
                lambda i: H.twist(1, S.column(i)),
                lambda i: S.apply(H.twist_basis(1, i)),
            ),
        ),
        (
            "sigma_antipode_right",
            lambda: identity_entry(
                "sigma_antipode_right", fld, (n,),
                lambda i: side(i, left=False),
                lambda i: vec_scale(H.counit[i], one),
            ),
        ),
        (
            "sigma_antipode_left",
            lambda: identity_entry(
                "sigma_antipode_left", fld, (n,),
                lambda i: side(i, left=True),
                lambda i: vec_scale(H.counit[i], one),
            ),
        ),
    ]
    return run_checks(f"{H.name}:sigma_antipode", checks)


def build_biproduct_antipode(bp: Biproduct, S_H: Matrix, S_A: Matrix) -> HomHopfAlgebra:
    """S(a#h) = (1 # S_H(α⁻³(a(-1)) α⁻²(h))) (S_A(β⁻²(a(0))) # 1).

    Raises:
        PreconditionFailed: S_A is not a convolution inverse of id_A
            commuting with β, or S_H is not a σ-antipode.
    """
    B, cp = bp.bialgebra, bp.crossed
    A, H = _require_base(cp.base), cp.hopf
    nA, nH, fld = A.dim, H.dim, A.field
    ident = LinMap(Matrix.identity(fld, nA), A.name, A.name)
    s_a = LinMap(S_A, A.name, A.name)
    unit = convolution_unit(A, A).matrix
    if convolve(A, A, s_a, ident).matrix != unit or convolve(A, A, ident, s_a).matrix != unit:
        raise PreconditionFailed("S_A is not a convolution inverse of the identity of the base")
    if A.alpha @ S_A != S_A @ A.alpha:
        raise PreconditionFailed("S_A does not commute with the structure map of the base")
    if not check_sigma_antipode(bp.cocycle, S_H).passed:
        raise PreconditionFailed("S_H is not a sigma-antipode")

    def image(x: int) -> Vector:
        p, i = divmod(x, nH)
        h = H.twist_basis(-2, i)
        parts = []
        for k, q, c in bp.coaction.terms(p):
            left = outer(A.unit, S_H.apply(H.product(H.twist_basis(-3, k), h)))
            right = outer(S_A.apply(A.twist_basis(-2, q)), H.unit)
            parts.append(vec_scale(c, B.product(left, right)))
        return vec_sum(fld, B.dim, parts)

    antipode = Matrix.from_columns(fld, B.dim, [image(x) for x in range(B.dim)])
    return HomHopfAlgebra(
        fld,
        B.dim,
        B.labels,
        B.mul,
        B.unit,
        B.comul,
        B.counit,
        B.alpha,
        name=B.name,
        antipode=antipode,
    )


def base_antipode(A: HomBialgebra) -> Matrix:
    """Convolution inverse of id_A, solved linearly.

    Raises:
        NotInvertible: id_A has no two-sided convolution inverse.
    """
    return conv_invert(A, A, LinMap(Matrix.identity(A.field, A.dim), A.name, A.name)).matrix


def check_admissible_pair(action: WeakAction, comodule: ComoduleCoalgebra) -> Report:
    """Trivial-σ conditions plus the assembled Hom-Hopf algebra axioms."""
    A = _require_base(action.algebra)
    H = action.hopf
    sigma = CocycleMap.trivial(H, A)
    conditions = [
        *crossed_product_conditions(action, sigma),
        check_comodule_coalgebra(comodule),
        check_twisted_comodule_cocycle(sigma, comodule),
        check_biproduct_conditions(action, sigma, comodule),
    ]
    head = Report(f"{A.name}#{H.name}:admissible_pair").merged(*conditions, prefix=True)
    if not head.passed:
        return head
    return head.merged(verify(StructureKind.HOPF, build_module_biproduct(action, comodule)), prefix=True)


def build_module_biproduct(action: WeakAction, comodule: ComoduleCoalgebra) -> HomHopfAlgebra:
    """The Hom-Hopf algebra A × H of an admissible pair (trivial σ).

    Raises:
        PreconditionFailed: the base has no antipode or H is not a σ-antipode.
        NotInvertible: id_A has no convolution inverse.
    """
    A = _require_base(action.algebra)
    H = action.hopf
    bp = assemble_bialgebra(action, CocycleMap.trivial(H, A), comodule, enforce=False)
    return build_biproduct_antipode(bp, H.antipode, base_antipode(A))


__all__ = [
    "BIPRODUCT_CONDITIONS",
    "Biproduct",
    "ComoduleCoalgebra",
    "assemble_bialgebra",
    "base_antipode",
    "build_biproduct_antipode",
    "build_module_biproduct",
    "build_smash_coproduct",
    "check_admissible_pair",
    "check_biproduct_conditions",
    "check_comodule_coalgebra",
    "check_sigma_antipode",
    "check_twisted_comodule_cocycle",
    "smash_comultiplication",
]
