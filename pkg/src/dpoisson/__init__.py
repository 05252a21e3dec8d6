"""Exact symbolic engine for shifted double Poisson brackets on free
graded noncommutative algebras over the rationals."""

from .core import (
    Colour,
    FreeAlgebra,
    Generator,
    NCPoly,
    ShiftContext,
    Tensor2,
    Tensor3,
    cyclic_class,
    cyclic_normalize,
    koszul_sign,
    poly_mul,
    sign_exp,
    tensor2,
)
from .reports import AxiomCheck, CheckReport
from .brackets import (
    BracketSpec,
    antisym_partner,
    check_antisymmetry,
    check_double_jacobi,
    check_extension_order,
    check_left_leibniz,
    check_necklace_jacobi,
    double_jacobiator,
    extend_bracket,
    leibniz_bracket,
    necklace_bracket,
    project_cyclic,
    render_cyclic,
    run_bracket_checks,
    swap_legs,
)
from .dlr import (
    BimoduleSpec,
    BracketClass,
    DLRData,
    assoc_product_check,
    bracket_is_zero,
    classify_bracket,
    dlr_check,
    dlr_to_linear,
    linear_to_dlr,
    quadratic_as_double_lie,
)
from .calculus import (
    DerPresentation,
    OmegaPresentation,
    double_partial,
    ev_pairing,
    koszul_bracket,
    koszul_square_check,
    lift_derivation,
    phi_composite,
    psi_composite,
    sn_bracket,
    universal_derivation,
)
from .shifting import shift_dlr, verify_shift_equivalence
from .textio import (
    Document,
    DocumentError,
    format_document,
    parse_document,
)

__all__ = [
    "AxiomCheck",
    "BimoduleSpec",
    "BracketClass",
    "BracketSpec",
    "CheckReport",
    "Colour",
    "DLRData",
    "DerPresentation",
    "Document",
    "DocumentError",
    "FreeAlgebra",
    "Generator",
    "NCPoly",
    "OmegaPresentation",
    "ShiftContext",
    "Tensor2",
    "Tensor3",
    "antisym_partner",
    "assoc_product_check",
    "bracket_is_zero",
    "check_antisymmetry",
    "check_double_jacobi",
    "check_extension_order",
    "check_left_leibniz",
    "check_necklace_jacobi",
    "classify_bracket",
    "cyclic_class",
    "cyclic_normalize",
    "dlr_check",
    "dlr_to_linear",
    "double_jacobiator",
    "double_partial",
    "ev_pairing",
    "extend_bracket",
    "format_document",
    "koszul_bracket",
    "koszul_sign",
    "koszul_square_check",
    "leibniz_bracket",
    "lift_derivation",
    "linear_to_dlr",
    "necklace_bracket",
    "parse_document",
    "phi_composite",
    "poly_mul",
    "project_cyclic",
    "psi_composite",
    "quadratic_as_double_lie",
    "render_cyclic",
    "run_bracket_checks",
    "shift_dlr",
    "sign_exp",
    "sn_bracket",
    "swap_legs",
    "tensor2",
    "universal_derivation",
    "verify_shift_equivalence",
]
