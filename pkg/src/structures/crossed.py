"""Weak actions, twisted cocycles and Hom-crossed products A #σ H.

An element a ⊗ h of the carrier sits at flat index ``p * dim(H) + i`` for
basis vectors e_p of A and e_i of H; its label is ``"a#h"``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from errors import ConditionsFailed, NotEndomorphism, PreconditionFailed, ShapeMismatch
from exactlin import Matrix, Tensor3, Vector, outer, vec_scale, vec_sum
from models import Report
from structures.homcore import (
    SPLIT,
    SPLIT_LEFT,
    SPLIT_RIGHT,
    AnyAlgebra,
    HomAlgebra,
    HomHopfAlgebra,
    LinMap,
    conv_invert,
    identity_entry,
    run_checks,
    tensor_coalgebra,
    verify,
)

logger = logging.getLogger("homkit")


# =============================================================================
# DATA
# =============================================================================


@dataclass(frozen=True)
class WeakAction:
    """Linear map H ⊗ A → A, ``act.entry(i, p, q)`` = coefficient of e_q in e_i·e_p."""

    hopf: HomHopfAlgebra
    algebra: AnyAlgebra
    act: Tensor3

    def __post_init__(self) -> None:
        self.hopf.field.check_same(self.algebra.field)
        dims = (self.hopf.dim, self.algebra.dim, self.algebra.dim)
        if self.act.dims != dims:
            raise ShapeMismatch(f"action tensor {self.act.dims}, expected {dims}")

    def apply(self, h: Vector, a: Vector) -> Vector:
        return self.act.bilinear(h, a)

    @classmethod
    def trivial(cls, H: HomHopfAlgebra, A: AnyAlgebra) -> WeakAction:
        """h·a = ε(h)β(a)."""
        dims = (H.dim, A.dim, A.dim)
        return cls(
            H, A, Tensor3.from_bilinear(A.field, dims, lambda i, p: vec_scale(H.counit[i], A.twist_basis(1, p)))
        )


@dataclass(frozen=True)
class CocycleMap:
    """Linear map σ: H ⊗ H → A; ``sigma.fiber(i, j)`` is σ(e_i, e_j)."""

    hopf: HomHopfAlgebra
    algebra: AnyAlgebra
    sigma: Tensor3

    def __post_init__(self) -> None:
        self.hopf.field.check_same(self.algebra.field)
        dims = (self.hopf.dim, self.hopf.dim, self.algebra.dim)
        if self.sigma.dims != dims:
            raise ShapeMismatch(f"cocycle tensor {self.sigma.dims}, expected {dims}")

    def __call__(self, h: Vector, g: Vector) -> Vector:
        return self.sigma.bilinear(h, g)

    @classmethod
    def trivial(cls, H: HomHopfAlgebra, A: AnyAlgebra) -> CocycleMap:
        """σ(h, g) = ε(h)ε(g)1."""
        dims = (H.dim, H.dim, A.dim)
        return cls(
            H, A, Tensor3.from_bilinear(A.field, dims, lambda i, j: vec_scale(H.counit[i] * H.counit[j], A.unit))
        )

    def as_linmap(self) -> LinMap:
        """σ as a map H⊗H → A; column ``i * dim(H) + j`` is σ(e_i, e_j)."""
        n = self.hopf.dim
        cols = [self.sigma.fiber(p // n, p % n) for p in range(n * n)]
        return LinMap(
            Matrix.from_columns(self.algebra.field, self.algebra.dim, cols),
            f"{self.hopf.name}⊗{self.hopf.name}",
            self.algebra.name,
        )

    @cached_property
    def inverse(self) -> CocycleMap:
        """Two-sided convolution inverse on the tensor coalgebra H⊗H.

        Raises:
            NotInvertible: σ has no two-sided inverse.
        """
        H, A = self.hopf, self.algebra
        inv = conv_invert(tensor_coalgebra(H, H), A, self.as_linmap())
        n = H.dim
        dims = (n, n, A.dim)
        return CocycleMap(H, A, Tensor3.from_bilinear(A.field, dims, lambda i, j: inv.image(i * n + j)))

    @property
    def is_trivial(self) -> bool:
        return self == CocycleMap.trivial(self.hopf, self.algebra)


@dataclass(frozen=True)
class CrossedProduct:
    """A #σ H: the carrier algebra together with the data it was built from."""

    algebra: HomAlgebra
    base: AnyAlgebra
    hopf: HomHopfAlgebra
    action: WeakAction
    cocycle: CocycleMap

    def element(self, a: Vector, h: Vector) -> Vector:
        return outer(a, h)

    def index(self, p: int, i: int) -> int:
        return p * self.hopf.dim + i


def _same_pair(action: WeakAction, cocycle: CocycleMap) -> None:
    if action.hopf is not cocycle.hopf and action.hopf != cocycle.hopf:
        raise ShapeMismatch("action and cocycle are defined over different Hopf algebras")
    if action.algebra is not cocycle.algebra and action.algebra != cocycle.algebra:
        raise ShapeMismatch("action and cocycle target different algebras")


# =============================================================================
# CONDITION CHECKS
# =============================================================================


def _weak_action_checks(action: WeakAction) -> list:
    H, A, act = action.hopf, action.algebra, action.apply
    nH, nA, fld = H.dim, A.dim, A.field

    def multiplicative_rhs(i: int, p: int, q: int) -> Vector:
        return vec_sum(
            fld, nA,
            (
                vec_scale(c, A.product(act(H.e(h1), A.e(p)), act(H.e(h2), A.e(q))))
                for (h1, h2), c in H.sweedler(i, SPLIT)
            ),
        )

    return [
        (
            "action_alpha",
            lambda: identity_entry(
                "action_alpha", fld, (nH, nA),
                lambda i, p: A.twist(1, act(H.e(i), A.e(p))),
                lambda i, p: act(H.twist_basis(1, i), A.twist_basis(1, p)),
            ),
        ),
        (
            "action_multiplicative",
            lambda: identity_entry(
                "action_multiplicative", fld, (nH, nA, nA),
                lambda i, p, q: act(H.twist_basis(2, i), A.product(A.e(p), A.e(q))),
                multiplicative_rhs,
            ),
        ),
        (
            "action_unit",
            lambda: identity_entry(
                "action_unit", fld, (nH,),
                lambda i: act(H.e(i), A.unit),
                lambda i: vec_scale(H.counit[i], A.unit),
            ),
        ),
    ]


def check_weak_action(action: WeakAction) -> Report:
    """β(h·a) = α(h)·β(a), α²(h)·(ab) = (h1·a)(h2·b) and h·1 = ε(h)1."""
    return run_checks(f"{action.algebra.name}:weak_action", _weak_action_checks(action))


def check_module_algebra(action: WeakAction) -> Report:
    """Weak-action laws plus 1·a = β(a) and α(h)·(l·a) = (hl)·β(a)."""
    H, A, act = action.hopf, action.algebra, action.apply
    nH, nA, fld = H.dim, A.dim, A.field
    checks = _weak_action_checks(action) + [
        (
            "module_unit",
            lambda: identity_entry(
                "module_unit", fld, (nA,),
                lambda p: act(H.unit, A.e(p)),
                lambda p: A.twist_basis(1, p),
            ),
        ),
        (
            "module_associative",
            lambda: identity_entry(
                "module_associative", fld, (nH, nH, nA),
                lambda i, j, p: act(H.twist_basis(1, i), act(H.e(j), A.e(p))),
                lambda i, j, p: act(H.product(H.e(i), H.e(j)), A.twist_basis(1, p)),
            ),
        ),
    ]
    return run_checks(f"{A.name}:module_algebra", checks)


def check_twisted_module(action: WeakAction, cocycle: CocycleMap) -> Report:
    """1·a = β(a) and the σ-twisted module law."""
    _same_pair(action, cocycle)
    H, A, act, sigma = action.hopf, action.algebra, action.apply, cocycle
    nH, nA, fld = H.dim, A.dim, A.field

    def lhs(i: int, j: int, p: int) -> Vector:
        # (h1·(α⁻¹(l1)·a)) σ(α(h2), α(l2))
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d,
                    A.product(
                        act(H.e(h1), act(H.twist_basis(-1, l1), A.e(p))),
                        sigma(H.twist_basis(1, h2), H.twist_basis(1, l2)),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (l1, l2), d in H.sweedler(j, SPLIT)
            ),
        )

    def rhs(i: int, j: int, p: int) -> Vector:
        # σ(α(h1), α(l1)) (α⁻¹(h2 l2)·β(a))
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d,
                    A.product(
                        sigma(H.twist_basis(1, h1), H.twist_basis(1, l1)),
                        act(H.twist(-1, H.product(H.e(h2), H.e(l2))), A.twist_basis(1, p)),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (l1, l2), d in H.sweedler(j, SPLIT)
            ),
        )

    checks = [
        (
            "twisted_unit",
            lambda: identity_entry(
                "twisted_unit", fld, (nA,),
                lambda p: act(H.unit, A.e(p)),
                lambda p: A.twist_basis(1, p),
            ),
        ),
        ("twisted_module", lambda: identity_entry("twisted_module", fld, (nH, nH, nA), lhs, rhs)),
    ]
    return run_checks(f"{A.name}:twisted_module", checks)


def check_normal(cocycle: CocycleMap) -> Report:
    """σ(h, 1) = σ(1, h) = ε(h)1 and σ∘(α⊗α) = β∘σ."""
    H, A, sigma = cocycle.hopf, cocycle.algebra, cocycle
    nH, fld = H.dim, A.field
    checks = [
        (
            "normal_right",
            lambda: identity_entry(
                "normal_right", fld, (nH,),
                lambda i: sigma(H.e(i), H.unit),
                lambda i: vec_scale(H.counit[i], A.unit),
            ),
        ),
        (
            "normal_left",
            lambda: identity_entry(
                "normal_left", fld, (nH,),
                lambda i: sigma(H.unit, H.e(i)),
                lambda i: vec_scale(H.counit[i], A.unit),
            ),
        ),
        (
            "normal_alpha",
            lambda: identity_entry(
                "normal_alpha", fld, (nH, nH),
                lambda i, j: sigma(H.twist_basis(1, i), H.twist_basis(1, j)),
                lambda i, j: A.twist(1, sigma(H.e(i), H.e(j))),
            ),
        ),
    ]
    return run_checks(f"{A.name}:normal", checks)


def check_cocycle(action: WeakAction, cocycle: CocycleMap) -> Report:
    """(h1·σ(l1, m1)) σ(α(h2), l2 m2) = σ(α(h1), α(l1)) σ(h2 l2, α²(m))."""
    _same_pair(action, cocycle)
    H, A, act, sigma = action.hopf, action.algebra, action.apply, cocycle
    nH, nA, fld = H.dim, A.dim, A.field

    def lhs(i: int, j: int, k: int) -> Vector:
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d * f,
                    A.product(
                        act(H.e(h1), sigma(H.e(l1), H.e(m1))),
                        sigma(H.twist_basis(1, h2), H.product(H.e(l2), H.e(m2))),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (l1, l2), d in H.sweedler(j, SPLIT)
                for (m1, m2), f in H.sweedler(k, SPLIT)
            ),
        )

    def rhs(i: int, j: int, k: int) -> Vector:
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d,
                    A.product(
                        sigma(H.twist_basis(1, h1), H.twist_basis(1, l1)),
                        sigma(H.product(H.e(h2), H.e(l2)), H.twist_basis(2, k)),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (l1, l2), d in H.sweedler(j, SPLIT)
            ),
        )

    return run_checks(
        f"{A.name}:cocycle",
        [("cocycle", lambda: identity_entry("cocycle", fld, (nH, nH, nH), lhs, rhs))],
    )


def crossed_product_conditions(action: WeakAction, cocycle: CocycleMap) -> list[Report]:
    return [
        check_weak_action(action),
        check_twisted_module(action, cocycle),
        check_normal(cocycle),
        check_cocycle(action, cocycle),
    ]


# =============================================================================
# CONSTRUCTIONS
# =============================================================================


def crossed_multiplication(action: WeakAction, cocycle: CocycleMap) -> Tensor3:
    """Structure constants of (a#h)(b#g) = a[(α⁻⁴(h11)·β⁻²(b)) σ(α⁻³(h12), α⁻²(g1))] # α⁻¹(h2 g2)."""
    _same_pair(action, cocycle)
    H, A, act, sigma = action.hopf, action.algebra, action.apply, cocycle
    nH, nA, fld = H.dim, A.dim, A.field
    n = nA * nH

    def fiber(x: int, y: int) -> Vector:
        p, i = divmod(x, nH)
        q, j = divmod(y, nH)
        b = A.twist_basis(-2, q)
        parts = []
        for (h11, h12, h2), c in H.sweedler(i, SPLIT_LEFT):
            moved = act(H.twist_basis(-4, h11), b)
            for (g1, g2), d in H.sweedler(j, SPLIT):
                s = sigma(H.twist_basis(-3, h12), H.twist_basis(-2, g1))
                left = A.product(A.e(p), A.product(moved, s))
                right = H.twist(-1, H.product(H.e(h2), H.e(g2)))
                parts.append(vec_scale(c * d, outer(left, right)))
        return vec_sum(fld, n, parts)

    return Tensor3.from_bilinear(fld, (n, n, n), fiber)


def _carrier(A: AnyAlgebra, H: HomHopfAlgebra, mul: Tensor3, name: str) -> HomAlgebra:
    return HomAlgebra(
        A.field,
        A.dim * H.dim,
        tuple(f"{a}#{h}" for a in A.labels for h in H.labels),
        mul,
        outer(A.unit, H.unit),
        A.alpha.kron(H.alpha),
        name=name,
    )


def build_crossed_product(
    action: WeakAction, cocycle: CocycleMap, *, enforce: bool = True
) -> CrossedProduct:
    """Build A #σ H.

    With ``enforce`` the weak-action, twisted-module, normality and cocycle
    conditions must all pass. ``enforce=False`` builds the candidate anyway,
    which is how failing conditions are shown to break associativity.

    Raises:
        ConditionsFailed: a condition failed and ``enforce`` is set.
    """
    if enforce:
        reports = crossed_product_conditions(action, cocycle)
        if not all(r.passed for r in reports):
            raise ConditionsFailed("crossed product", reports)
    A, H = action.algebra, action.hopf
    carrier = _carrier(A, H, crossed_multiplication(action, cocycle), f"{A.name}#{H.name}")
    logger.debug("built crossed product %s (dim %d)", carrier.name, carrier.dim)
    return CrossedProduct(carrier, A, H, action, cocycle)


def build_smash_product(action: WeakAction, *, enforce: bool = True) -> CrossedProduct:
    """A # H with (a#h)(b#g) = a(α⁻²(h1)·β⁻¹(b)) # α⁻¹(h2)g.

    Raises:
        ConditionsFailed: ``action`` does not make A an H-module algebra.
    """
    if enforce:
        report = check_module_algebra(action)
        if not report.passed:
            raise ConditionsFailed("smash product", [report])
    H, A, act = action.hopf, action.algebra, action.apply
    nH, nA, fld = H.dim, A.dim, A.field
    n = nA * nH

    def fiber(x: int, y: int) -> Vector:
        p, i = divmod(x, nH)
        q, j = divmod(y, nH)
        b = A.twist_basis(-1, q)
        return vec_sum(
            fld, n,
            (
                vec_scale(
                    c,
                    outer(
                        A.product(A.e(p), act(H.twist_basis(-2, h1), b)),
                        H.product(H.twist_basis(-1, h2), H.e(j)),
                    ),
                )
                for (h1, h2), c in H.sweedler(i, SPLIT)
            ),
        )

    carrier = _carrier(A, H, Tensor3.from_bilinear(fld, (n, n, n), fiber), f"{A.name}#{H.name}")
    return CrossedProduct(carrier, A, H, action, CocycleMap.trivial(H, A))


# =============================================================================
# DERIVED IDENTITIES
# =============================================================================


def verify_crossed_identities(action: WeakAction, cocycle: CocycleMap) -> Report:
    """Identities every crossed product satisfies.

    Two identities move the action past σ and σ⁻¹; four describe products
    of the embedded copies A#1 and 1#H inside A #σ H. The first identity
    is read with h12 g12 in the second σ factor.

    Raises:
        NotInvertible: σ has no convolution inverse.
    """
    _same_pair(action, cocycle)
    H, A, act, sigma = action.hopf, action.algebra, action.apply, cocycle
    sigma_inv = cocycle.inverse
    nH, nA, fld = H.dim, A.dim, A.field
    cp = build_crossed_product(action, cocycle, enforce=False)
    B = cp.algebra

    def hm(k: int, u: Vector, v: Vector) -> Vector:
        return H.twist(k, H.product(u, v))

    def through_sigma(i: int, j: int, k: int) -> Vector:
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d * f,
                    A.product(
                        A.product(
                            sigma(H.twist_basis(-3, h11), H.twist_basis(-3, g11)),
                            sigma(hm(-4, H.e(h12), H.e(g12)), H.twist_basis(-2, l1)),
                        ),
                        sigma_inv(H.twist_basis(-1, h2), hm(-2, H.e(g2), H.e(l2))),
                    ),
                )
                for (h11, h12, h2), c in H.sweedler(i, SPLIT_LEFT)
                for (g11, g12, g2), d in H.sweedler(j, SPLIT_LEFT)
                for (l1, l2), f in H.sweedler(k, SPLIT)
            ),
        )

    def through_inverse(i: int, j: int, k: int) -> Vector:
        return vec_sum(
            fld, nA,
            (
                vec_scale(
                    c * d * f,
                    A.product(
                        sigma(H.twist_basis(-1, h1), hm(-2, H.e(g1), H.e(l1))),
                        A.product(
                            sigma_inv(hm(-4, H.e(h21), H.e(g21)), H.twist_basis(-2, l2)),
                            sigma_inv(H.twist_basis(-3, h22), H.twist_basis(-3, g22)),
                        ),
                    ),
                )
                for (h1, h21, h22), c in H.sweedler(i, SPLIT_RIGHT)
                for (g1, g21, g22), d in H.sweedler(j, SPLIT_RIGHT)
                for (l1, l2), f in H.sweedler(k, SPLIT)
            ),
        )

    def hopf_pair(i: int, j: int) -> Vector:
        return vec_sum(
            fld, B.dim,
            (
                vec_scale(c * d, outer(sigma(H.e(h1), H.e(g1)), hm(-1, H.e(h2), H.e(g2))))
                for (h1, h2), c in H.sweedler(i, SPLIT)
                for (g1, g2), d in H.sweedler(j, SPLIT)
            ),
        )

    def hopf_then_algebra(i: int, p: int) -> Vector:
        return vec_sum(
            fld, B.dim,
            (
                vec_scale(c, outer(act(H.twist_basis(-1, h1), A.e(p)), H.e(h2)))
                for (h1, h2), c in H.sweedler(i, SPLIT)
            ),
        )

    def cp_mul(a: Vector, h: Vector, b: Vector, g: Vector) -> Vector:
        return B.product(outer(a, h), outer(b, g))

    checks = [
        (
            "action_through_sigma",
            lambda: identity_entry(
                "action_through_sigma", fld, (nH, nH, nH),
                lambda i, j, k: act(H.e(i), sigma(H.e(j), H.e(k))),
                through_sigma,
            ),
        ),
        (
            "action_through_sigma_inverse",
            lambda: identity_entry(
                "action_through_sigma_inverse", fld, (nH, nH, nH),
                lambda i, j, k: act(H.e(i), sigma_inv(H.e(j), H.e(k))),
                through_inverse,
            ),
        ),
        (
            "algebra_embedding",
            lambda: identity_entry(
                "algebra_embedding", fld, (nA, nA),
                lambda p, q: cp_mul(A.e(p), H.unit, A.e(q), H.unit),
                lambda p, q: outer(A.product(A.e(p), A.e(q)), H.unit),
            ),
        ),
        (
            "hopf_embedding",
            lambda: identity_entry(
                "hopf_embedding", fld, (nH, nH),
                lambda i, j: cp_mul(A.unit, H.e(i), A.unit, H.e(j)),
                hopf_pair,
            ),
        ),
        (
            "hopf_times_algebra",
            lambda: identity_entry(
                "hopf_times_algebra", fld, (nH, nA),
                lambda i, p: cp_mul(A.unit, H.e(i), A.e(p), H.unit),
                hopf_then_algebra,
            ),
        ),
        (
            "algebra_times_hopf",
            lambda: identity_entry(
                "algebra_times_hopf", fld, (nA, nH),
                lambda p, i: cp_mul(A.e(p), H.unit, A.unit, H.e(i)),
                lambda p, i: outer(A.twist_basis(1, p), H.twist_basis(1, i)),
            ),
        ),
    ]
    return run_checks(f"{B.name}:crossed_identities", checks)


# =============================================================================
# YAU TWISTS OF CLASSICAL DATA
# =============================================================================


def twist_algebra(A: HomAlgebra, beta: Matrix, name: str | None = None) -> HomAlgebra:
    """(A, β∘μ, 1, β) for a classical algebra A and an automorphism β.

    Raises:
        PreconditionFailed: A is not classical.
        NotEndomorphism: β is not a unital algebra map.
    """
    if not A.alpha.is_identity():
        raise PreconditionFailed("twist_algebra expects classical input with alpha = id")
    n = A.dim
    if beta.shape != (n, n):
        raise ShapeMismatch(f"automorphism of shape {beta.shape} on dimension {n}")
    if beta.apply(A.unit) != A.unit:
        raise NotEndomorphism("unital")
    for i in range(n):
        for j in range(n):
            if beta.apply(A.product(A.e(i), A.e(j))) != A.product(beta.column(i), beta.column(j)):
                raise NotEndomorphism("multiplicative")
    mul = Tensor3.from_bilinear(A.field, (n, n, n), lambda i, j: beta.apply(A.mul.fiber(i, j)))
    return HomAlgebra(A.field, n, A.labels, mul, A.unit, beta, name=name or f"{A.name}_beta")


def twist_weak_action(
    action: WeakAction, H_twisted: HomHopfAlgebra, A_twisted: HomAlgebra
) -> WeakAction:
    """h ▷ a = α(h)·β(a) on the Yau twists of a classical weak action.

    Raises:
        PreconditionFailed: β(h·a) ≠ α(h)·β(a) for the classical action.
    """
    alpha, beta = H_twisted.alpha, A_twisted.alpha
    H, A = action.hopf, action.algebra
    for i in range(H.dim):
        for p in range(A.dim):
            if beta.apply(action.apply(H.e(i), A.e(p))) != action.apply(alpha.column(i), beta.column(p)):
                raise PreconditionFailed("the action does not intertwine the structure maps")
    dims = (H.dim, A.dim, A.dim)
    act = Tensor3.from_bilinear(
        A.field, dims, lambda i, p: action.apply(alpha.column(i), beta.column(p))
    )
    return WeakAction(H_twisted, A_twisted, act)


def twist_cocycle(
    cocycle: CocycleMap, H_twisted: HomHopfAlgebra, A_twisted: HomAlgebra
) -> CocycleMap:
    """Reuse σ on the Yau twists; requires σ∘(α⊗α) = β∘σ.

    Raises:
        PreconditionFailed: σ does not intertwine the structure maps.
    """
    alpha, beta = H_twisted.alpha, A_twisted.alpha
    n = H_twisted.dim
    for i in range(n):
        for j in range(n):
            if cocycle(alpha.column(i), alpha.column(j)) != beta.apply(cocycle.sigma.fiber(i, j)):
                raise PreconditionFailed("sigma does not intertwine the structure maps")
    return CocycleMap(H_twisted, A_twisted, cocycle.sigma)


def associativity_report(cp: CrossedProduct) -> Report:
    """verify(algebra) on the carrier of a crossed product."""
    return verify("algebra", cp.algebra)


__all__ = [
    "CocycleMap",
    "CrossedProduct",
    "WeakAction",
    "associativity_report",
    "build_crossed_product",
    "build_smash_product",
    "check_cocycle",
    "check_module_algebra",
    "check_normal",
    "check_twisted_module",
    "check_weak_action",
    "crossed_multiplication",
    "crossed_product_conditions",
    "twist_algebra",
    "twist_cocycle",
    "twist_weak_action",
    "verify_crossed_identities",
]
