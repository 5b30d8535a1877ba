"""Exact arithmetic toolkit for 3-Lie algebras, 3-pre-Lie algebras and their
product, complex, symplectic and Kähler structures."""

from .exactnum import GAUSSIAN, RATIONAL, Gauss, format_scalar, parse_scalar
from .kaehler import (
    KaehlerVerdict,
    LeviCivita,
    aff_complex_product,
    check_complex_product,
    check_para_kaehler,
    check_pseudo_kaehler,
    complex_product_from_phi,
    complexify_pseudo_kaehler,
    levi_civita,
    metric_prelie_structures,
    para_kaehler_mixed_formulas,
    realify_para_kaehler,
)
from .prelie import (
    PreLieRep,
    ThreePreLie,
    check_invariant_form,
    check_O_operator,
    check_prelie_axioms,
    check_prelie_representation,
    combined_rep,
    compatible_prelie_from_O,
    dual_prelie_rep,
    invariant_forms,
    left_mult,
    right_mult,
    semidirect_prelie,
    sub_adjacent,
)
from .report import Report, Witness, witness_limit
from .reps import Representation, check_representation, dual_representation, semidirect_product
from .search import CandidateFamily, enumerate_complex, enumerate_products, pair_search
from .structures import (
    ComplexClass,
    Complexified,
    ProductClass,
    classify_complex,
    classify_product,
    complex_from_subalgebra,
    complexify,
    j_bracket,
    product_complex_duality,
    product_from_decomposition,
)
from .symplectic import (
    BilForm,
    canonical_form,
    check_manin_triple,
    check_phase_space,
    check_quadratic_prelie,
    check_symplectic,
    manin_mixed_products,
    phase_space,
    prelie_from_symplectic,
    wedge,
)
from .threelie import (
    Subspace,
    ThreeLieAlgebra,
    adjoint_rep,
    check_derivation_form,
    check_fundamental_identity,
    check_nijenhuis,
    direct_sum,
    transport,
)

__version__ = "0.1.0"
