"""Worked examples shipped with homkit.

This module provides the example structures used by the CLI ``corpus``
verb, the tests and the documentation.

Entries:
--------

1. H4 (Sweedler's four-dimensional Hopf algebra, Yau-twisted):
   - Basis 1, g, x, y; α(1) = 1, α(g) = g, α(x) = -x, α(y) = -y
   - Δ(x) = (-x) ⊗ g + 1 ⊗ (-x), Δ(y) = (-y) ⊗ 1 + g ⊗ (-y)
   - S(x) = y, S(y) = -x
   - ``sweedler`` is the classical algebra it is twisted from

2. k[a]/(a²):
   - ``kaa`` as a Hom-algebra with α = id, ``kaa_hopf`` with a primitive
   - ``action_h4``: h·1 = ε(h)1, 1·a = g·a = a, x·a = y·a = 0

3. σ_t (one-parameter cocycle on H4):
   - σ(1|g, 1|g) = 1, σ(x, x) = σ(y, x) = t/2, σ(x, y) = σ(y, y) = -t/2,
     zero on the mixed entries
   - ``sigma_t`` takes values in k[a]/(a²), ``scalar_sigma_t`` in k

4. The printed 8×8 crossed-product table of k[a]/(a²) #σ H4:
   - ``crossed_h4_printed`` parses it, ``crossed_table_discrepancies``
     lists the cells that disagree with the crossed multiplication

5. Small extras: ``kc2`` (group algebra of C2), ``ground`` (k),
   ``yd_h4`` (two-dimensional Yetter-Drinfeld module over H4(σ_t))
"""

from __future__ import annotations

import re
from collections.abc import Callable
from fractions import Fraction
from typing import Any

from errors import UnknownName
from exactlin import FieldSpec, Matrix, Scalar, ScalarLike, Tensor3, outer, vec_scale, vec_sum
from structures.crossed import CocycleMap, WeakAction, build_crossed_product
from structures.homcore import (
    HomAlgebra,
    HomHopfAlgebra,
    ground_field,
)
from structures.lazy import ScalarCocycle
from structures.ydmod import YDModule, deformation_bicomodule

# =============================================================================
# PUBLIC API
# =============================================================================

__all__ = [
    "CORPUS",
    "H4_LABELS",
    "KAA_LABELS",
    "action_h4",
    "corpus",
    "crossed_h4_printed",
    "crossed_table_discrepancies",
    "ground",
    "h4",
    "kaa",
    "kaa_hopf",
    "kc2",
    "scalar_sigma_t",
    "sigma_t",
    "sweedler",
    "yd_h4",
]


# =============================================================================
# TABLES
# =============================================================================

H4_LABELS = ("1", "g", "x", "y")
KAA_LABELS = ("1", "a")
CROSSED_LABELS = tuple(f"{a}#{h}" for a in KAA_LABELS for h in H4_LABELS)

# Hom multiplication of H4, row · column.
H4_MULTIPLICATION = (
    ("1", "g", "-x", "-y"),
    ("g", "1", "-y", "-x"),
    ("-x", "y", "0", "0"),
    ("-y", "x", "0", "0"),
)

H4_COMULTIPLICATION = {
    "1": (("1", "1", 1),),
    "g": (("g", "g", 1),),
    "x": (("x", "g", -1), ("1", "x", -1)),
    "y": (("y", "1", -1), ("g", "y", -1)),
}

H4_ANTIPODE = {"1": ("1", 1), "g": ("g", 1), "x": ("y", 1), "y": ("x", -1)}
H4_ALPHA = (1, 1, -1, -1)

# Classical Sweedler algebra: y = gx, xg = -y.
SWEEDLER_MULTIPLICATION = (
    ("1", "g", "x", "y"),
    ("g", "1", "y", "x"),
    ("x", "-y", "0", "0"),
    ("y", "-x", "0", "0"),
)

SWEEDLER_COMULTIPLICATION = {
    "1": (("1", "1", 1),),
    "g": (("g", "g", 1),),
    "x": (("x", "g", 1), ("1", "x", 1)),
    "y": (("y", "1", 1), ("g", "y", 1)),
}

# σ_t in units of t/2; the (1|g, 1|g) block is constant 1.
SIGMA_HALF_T = {("x", "x"): 1, ("x", "y"): -1, ("y", "x"): 1, ("y", "y"): -1}

# Printed crossed-product table, row · column, in the basis CROSSED_LABELS.
CROSSED_PRINTED = (
    ("1#1", "1#g", "-1#x", "-1#y", "a#1", "a#g", "-a#x", "-a#y"),
    ("1#g", "1#1", "-1#y", "-1#x", "a#g", "a#1", "-a#y", "-a#x"),
    ("-1#x", "1#y", "0", "0", "-a#x", "a#y", "-t/2 a#1", "-t/2 a#g"),
    ("-1#y", "1#x", "0", "0", "-a#y", "a#x", "-t/2 a#g", "t/2 a#1"),
    ("a#1", "a#g", "-a#x", "-a#y", "0", "0", "0", "0"),
    ("a#g", "a#1", "-a#y", "-a#y", "0", "0", "0", "0"),
    ("-a#x", "a#y", "t/2 a#1", "-t/2 a#g", "0", "0", "0", "0"),
    ("a#y", "a#x", "t/2 a#g", "-t/2 a#1", "0", "0", "0", "0"),
)

_CELL = re.compile(r"^(?P<sign>-?)(?P<half>t/2\s+)?(?P<label>\S+)$")


# =============================================================================
# HELPERS
# =============================================================================


def _default_field(field: FieldSpec | None) -> FieldSpec:
    return field or FieldSpec.rationals()


def _half(fld: FieldSpec, t: ScalarLike) -> Scalar:
    return fld.scalar(t) * fld.scalar(Fraction(1, 2))


def _parse_cell(fld: FieldSpec, labels: tuple[str, ...], cell: str, t: ScalarLike = 0) -> tuple:
    """``"-y"``, ``"0"`` or ``"t/2 a#g"`` as a coordinate vector."""
    n = len(labels)
    if cell == "0":
        return (fld.zero,) * n
    m = _CELL.match(cell)
    if m is None or m.group("label") not in labels:
        raise ValueError(f"unparseable table cell {cell!r}")
    coeff = -fld.one if m.group("sign") else fld.one
    if m.group("half"):
        coeff *= _half(fld, t)
    v = [fld.zero] * n
    v[labels.index(m.group("label"))] = coeff
    return tuple(v)


def _table(fld: FieldSpec, labels: tuple[str, ...], rows: tuple, t: ScalarLike = 0) -> Tensor3:
    n = len(labels)
    return Tensor3.from_bilinear(fld, (n, n, n), lambda i, j: _parse_cell(fld, labels, rows[i][j], t))


def _comultiplication(fld: FieldSpec, labels: tuple[str, ...], table: dict) -> Tensor3:
    n = len(labels)

    def image(i: int) -> tuple:
        terms = []
        for left, right, c in table[labels[i]]:
            terms.append(
                vec_scale(
                    fld.scalar(c),
                    outer(_parse_cell(fld, labels, left), _parse_cell(fld, labels, right)),
                )
            )
        return vec_sum(fld, n * n, terms)

    return Tensor3.from_images(fld, (n, n, n), image)


def _hopf(
    fld: FieldSpec, mul_rows: tuple, comul: dict, alpha: tuple, name: str
) -> HomHopfAlgebra:
    n = len(H4_LABELS)
    antipode = Matrix.from_columns(
        fld,
        n,
        [
            vec_scale(fld.scalar(H4_ANTIPODE[label][1]), _parse_cell(fld, H4_LABELS, H4_ANTIPODE[label][0]))
            for label in H4_LABELS
        ],
    )
    unit = _parse_cell(fld, H4_LABELS, "1")
    counit = tuple(fld.one if label in ("1", "g") else fld.zero for label in H4_LABELS)
    return HomHopfAlgebra(
        fld,
        n,
        H4_LABELS,
        _table(fld, H4_LABELS, mul_rows),
        unit,
        _comultiplication(fld, H4_LABELS, comul),
        counit,
        Matrix.diagonal(fld, alpha),
        name=name,
        antipode=antipode,
    )


# =============================================================================
# ENTRIES
# =============================================================================


def h4(field: FieldSpec | None = None) -> HomHopfAlgebra:
    """Yau-twisted Sweedler algebra H4."""
    return _hopf(_default_field(field), H4_MULTIPLICATION, H4_COMULTIPLICATION, H4_ALPHA, "H4")


def sweedler(field: FieldSpec | None = None) -> HomHopfAlgebra:
    """Classical Sweedler algebra (α = id)."""
    return _hopf(_default_field(field), SWEEDLER_MULTIPLICATION, SWEEDLER_COMULTIPLICATION, (1, 1, 1, 1), "Sw")


def kaa(field: FieldSpec | None = None) -> HomAlgebra:
    """k[a]/(a²) with α = id."""
    fld = _default_field(field)
    rows = (("1", "a"), ("a", "0"))
    return HomAlgebra(
        fld, 2, KAA_LABELS, _table(fld, KAA_LABELS, rows), (fld.one, fld.zero), Matrix.identity(fld, 2), name="kaa"
    )


def kaa_hopf(field: FieldSpec | None = None) -> HomHopfAlgebra:
    """k[a]/(a²) with a primitive: Δ(a) = a ⊗ 1 + 1 ⊗ a, S(a) = -a."""
    fld = _default_field(field)
    base = kaa(fld)
    comul = _comultiplication(fld, KAA_LABELS, {"1": (("1", "1", 1),), "a": (("a", "1", 1), ("1", "a", 1))})
    return HomHopfAlgebra(
        fld,
        2,
        KAA_LABELS,
        base.mul,
        base.unit,
        comul,
        (fld.one, fld.zero),
        base.alpha,
        name="kaa",
        antipode=Matrix.diagonal(fld, (1, -1)),
    )


def action_h4(field: FieldSpec | None = None, base: HomAlgebra | None = None) -> WeakAction:
    """h·1 = ε(h)1, 1·a = g·a = a, x·a = y·a = 0."""
    fld = _default_field(field)
    H = h4(fld)
    A = base or kaa(fld)

    def fiber(i: int, p: int) -> tuple:
        if p == 0:
            return vec_scale(H.counit[i], A.unit)
        return A.e(1) if H4_LABELS[i] in ("1", "g") else A.zero()

    return WeakAction(H, A, Tensor3.from_bilinear(fld, (4, 2, 2), fiber))


def _sigma_value(fld: FieldSpec, t: ScalarLike, i: int, j: int) -> Scalar:
    h, g = H4_LABELS[i], H4_LABELS[j]
    if h in ("1", "g") and g in ("1", "g"):
        return fld.one
    return fld.scalar(SIGMA_HALF_T.get((h, g), 0)) * _half(fld, t)


def scalar_sigma_t(t: ScalarLike = 1, field: FieldSpec | None = None) -> ScalarCocycle:
    """σ_t as a scalar cocycle on H4."""
    fld = _default_field(field)
    form = Matrix.from_function(fld, 4, 4, lambda i, j: _sigma_value(fld, t, i, j))
    return ScalarCocycle(h4(fld), form, name=f"sigma_{fld.format(fld.scalar(t))}")


def sigma_t(t: ScalarLike = 1, field: FieldSpec | None = None) -> CocycleMap:
    """σ_t with values σ(h, g)·1 in k[a]/(a²)."""
    fld = _default_field(field)
    A = kaa(fld)
    tensor = Tensor3.from_bilinear(fld, (4, 4, 2), lambda i, j: vec_scale(_sigma_value(fld, t, i, j), A.unit))
    return CocycleMap(h4(fld), A, tensor)


def crossed_h4_printed(t: ScalarLike = 1, field: FieldSpec | None = None) -> Tensor3:
    """The printed multiplication table of k[a]/(a²) #σ H4, parsed."""
    fld = _default_field(field)
    return _table(fld, CROSSED_LABELS, CROSSED_PRINTED, t)


def crossed_table_discrepancies(t: ScalarLike = 1, field: FieldSpec | None = None) -> list[tuple[str, str]]:
    """Cells (row, column) where the printed table and the crossed multiplication differ."""
    fld = _default_field(field)
    printed = crossed_h4_printed(t, fld)
    computed = build_crossed_product(action_h4(fld), sigma_t(t, fld)).algebra.mul
    n = len(CROSSED_LABELS)
    return [
        (CROSSED_LABELS[i], CROSSED_LABELS[j])
        for i in range(n)
        for j in range(n)
        if printed.fiber(i, j) != computed.fiber(i, j)
    ]


def kc2(field: FieldSpec | None = None) -> HomHopfAlgebra:
    """Group algebra of C2 = {1, g} with α = id."""
    fld = _default_field(field)
    labels = ("1", "g")
    rows = (("1", "g"), ("g", "1"))
    comul = _comultiplication(fld, labels, {"1": (("1", "1", 1),), "g": (("g", "g", 1),)})
    ident = Matrix.identity(fld, 2)
    return HomHopfAlgebra(
        fld, 2, labels, _table(fld, labels, rows), (fld.one, fld.zero), comul,
        (fld.one, fld.one), ident, name="kC2", antipode=ident,
    )


def ground(field: FieldSpec | None = None) -> HomHopfAlgebra:
    """The ground field as a one-dimensional Hom-Hopf algebra."""
    return ground_field(_default_field(field))


def yd_h4(t: ScalarLike = 1, field: FieldSpec | None = None) -> YDModule:
    """Two-dimensional Yetter-Drinfeld module over H4(σ_t).

    μ = diag(1, -1); 1 acts by μ, g by the identity, x and y by
    [[0, t/2], [-1, 0]] and [[0, t/2], [1, 0]]; m1 ↦ m1 ⊗ 1, m2 ↦ -m2 ⊗ g.
    """
    fld = _default_field(field)
    half = _half(fld, t)
    one, zero = fld.one, fld.zero
    matrices = {
        "1": ((one, zero), (zero, -one)),
        "g": ((one, zero), (zero, one)),
        "x": ((zero, half), (-one, zero)),
        "y": ((zero, half), (one, zero)),
    }
    base = deformation_bicomodule(scalar_sigma_t(t, fld))
    action = Tensor3.from_function(fld, (4, 2, 2), lambda h, m, k: matrices[H4_LABELS[h]][k][m])
    coaction = Tensor3.from_images(
        fld,
        (2, 2, 4),
        lambda m: outer((one, zero), base.hopf.unit) if m == 0 else vec_scale(-one, outer((zero, one), base.hopf.e(1))),
    )
    return YDModule(base, ("m1", "m2"), Matrix.diagonal(fld, (1, -1)), action, coaction, name="M")


# =============================================================================
# REGISTRY
# =============================================================================

CORPUS: dict[str, Callable[..., Any]] = {
    "h4": lambda t, field: h4(field),
    "sweedler": lambda t, field: sweedler(field),
    "kaa": lambda t, field: kaa(field),
    "kaa_hopf": lambda t, field: kaa_hopf(field),
    "action_h4": lambda t, field: action_h4(field),
    "sigma_t": lambda t, field: sigma_t(t, field),
    "scalar_sigma_t": lambda t, field: scalar_sigma_t(t, field),
    "crossed_h4": lambda t, field: build_crossed_product(action_h4(field), sigma_t(t, field)),
    "kc2": lambda t, field: kc2(field),
    "ground": lambda t, field: ground(field),
    "yd_h4": lambda t, field: yd_h4(t, field),
}


def corpus(name: str, t: ScalarLike = 1, field: FieldSpec | None = None) -> Any:
    """Look up a corpus entry by name.

    Raises:
        UnknownName: ``name`` is not a corpus entry.
    """
    try:
        builder = CORPUS[name]
    except KeyError:
        raise UnknownName(f"unknown corpus entry {name!r}; known: {sorted(CORPUS)}") from None
    return builder(t, _default_field(field))
