"""Hom-structures over exact fields.

This package contains the algebraic constructions built on structure
constants:

- homcore: Hom-algebras, coalgebras, bialgebras, Hopf algebras, duals,
  Yau twists and convolution inverses
- crossed: weak actions, cocycles with values in A, crossed and smash products
- cleft: comodule algebras, coinvariants and the cleft/crossed correspondence
- biproduct: comodule coalgebras, smash coproducts and biproduct bialgebras
- lazy: scalar cocycles, deformations H(σ), lazy cohomology, twisted antipodes
- ydmod: bicomodule algebras, B ⋉ A, Yetter-Drinfeld modules and their duals
"""

from structures.biproduct import (
    BIPRODUCT_CONDITIONS,
    Biproduct,
    ComoduleCoalgebra,
    assemble_bialgebra,
    base_antipode,
    build_biproduct_antipode,
    build_module_biproduct,
    build_smash_coproduct,
    check_admissible_pair,
    check_biproduct_conditions,
    check_sigma_antipode,
)
from structures.cleft import (
    ComoduleAlgebra,
    LeftComoduleAlgebra,
    cleft_roundtrip,
    coinvariants,
    extract_crossed_data,
    gamma_from_crossed,
    verify_comodule_algebra,
    verify_left_comodule_algebra,
)
from structures.crossed import (
    CocycleMap,
    CrossedProduct,
    WeakAction,
    build_crossed_product,
    build_smash_product,
    check_cocycle,
    crossed_product_conditions,
    verify_crossed_identities,
)
from structures.homcore import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopfAlgebra,
    LinMap,
    conv_invert,
    dual,
    verify,
    yau_twist,
)
from structures.lazy import (
    ScalarCocycle,
    centrality_report,
    check_lazy,
    deform,
    is_coboundary,
    lazy_cocycles,
    lazy_cohomology,
    twisted_antipode_report,
    verify_cocycle_antipode_identities,
)
from structures.ydmod import (
    BicomoduleAlgebra,
    YDModule,
    build_b_ltimes_a,
    build_dual_yd,
    check_yd_module,
    diagonal_crossed_product,
)

__all__ = [
    "BIPRODUCT_CONDITIONS",
    "BicomoduleAlgebra",
    "Biproduct",
    "CocycleMap",
    "ComoduleAlgebra",
    "ComoduleCoalgebra",
    "CrossedProduct",
    "HomAlgebra",
    "HomBialgebra",
    "HomCoalgebra",
    "HomHopfAlgebra",
    "LeftComoduleAlgebra",
    "LinMap",
    "ScalarCocycle",
    "WeakAction",
    "YDModule",
    "assemble_bialgebra",
    "base_antipode",
    "build_b_ltimes_a",
    "build_biproduct_antipode",
    "build_crossed_product",
    "build_dual_yd",
    "build_module_biproduct",
    "build_smash_coproduct",
    "build_smash_product",
    "centrality_report",
    "check_admissible_pair",
    "check_biproduct_conditions",
    "check_cocycle",
    "check_lazy",
    "check_sigma_antipode",
    "check_yd_module",
    "cleft_roundtrip",
    "coinvariants",
    "conv_invert",
    "crossed_product_conditions",
    "deform",
    "diagonal_crossed_product",
    "dual",
    "extract_crossed_data",
    "gamma_from_crossed",
    "is_coboundary",
    "lazy_cocycles",
    "lazy_cohomology",
    "twisted_antipode_report",
    "verify",
    "verify_cocycle_antipode_identities",
    "verify_comodule_algebra",
    "verify_crossed_identities",
    "verify_left_comodule_algebra",
    "yau_twist",
]
