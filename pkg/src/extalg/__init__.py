"""Exact Grassmann (exterior) algebra toolkit.

Elements of E(n) over the rationals or GF(p), p odd, with generator-split
monomialization of subspaces, initial spans, a skew pairing on the odd
part, maximal-commutative-subalgebra machinery, and an independent
intersecting-family search that certifies the dimension formula.
"""

from .core import (
    AmbientMismatch,
    GrassmannElement,
    Monomial,
    compare_monomials,
    generator,
    monomial,
    unit,
    zero,
)
from .fields import QQ, FpElement, PrimeField, Rationals, field_by_name
from .setfamilies import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    SearchResult,
    SetFamily,
    all_odd_masks,
    ekr_max,
    enumerate_max_odd_intersecting,
    is_intersecting,
    is_odd_family,
    max_odd_intersecting,
    odd_upper_levels,
    star,
    two_level_max,
    two_level_maxima,
)
from .structure import (
    AlgebraHom,
    StructureReport,
    analyze,
    assemble,
    canonical_max_commutative,
    graded_radical,
    hom_from_images,
    is_commutative,
    is_e0_submodule,
    is_left_ideal,
    is_maximal_commutative,
    is_right_ideal,
    is_square_zero,
    is_subalgebra,
    max_commutative_dim,
    plucker_defects,
    radical_quotient_dim,
    upper_levels_commutative,
)
from .subspace import (
    Subspace,
    even_space,
    family_space,
    full_space,
    grade_space,
    hilbert_series,
    initial_span,
    min_degree_space,
    monomial_space,
    monomial_supports,
    monomialize,
    odd_space,
    perp,
    product_span,
    skew_form,
    span,
    split_generator,
    star_space,
    zero_space,
)
from .text import ParseError, parse_element, parse_expression, print_element, read_subspace, write_subspace
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "AlgebraHom",
    "AmbientMismatch",
    "CheckResult",
    "DEFAULT_BUDGET",
    "FpElement",
    "GrassmannElement",
    "Monomial",
    "ParseError",
    "PrimeField",
    "QQ",
    "Rationals",
    "SearchBudgetExceeded",
    "SearchResult",
    "SetFamily",
    "StructureReport",
    "Subspace",
    "all_odd_masks",
    "analyze",
    "assemble",
    "canonical_max_commutative",
    "compare_monomials",
    "ekr_max",
    "enumerate_max_odd_intersecting",
    "even_space",
    "family_space",
    "field_by_name",
    "full_space",
    "generator",
    "grade_space",
    "graded_radical",
    "hilbert_series",
    "hom_from_images",
    "initial_span",
    "is_commutative",
    "is_e0_submodule",
    "is_intersecting",
    "is_left_ideal",
    "is_maximal_commutative",
    "is_odd_family",
    "is_right_ideal",
    "is_square_zero",
    "is_subalgebra",
    "max_commutative_dim",
    "max_odd_intersecting",
    "min_degree_space",
    "monomial",
    "monomial_space",
    "monomial_supports",
    "monomialize",
    "odd_space",
    "odd_upper_levels",
    "parse_element",
    "parse_expression",
    "perp",
    "plucker_defects",
    "print_element",
    "product_span",
    "radical_quotient_dim",
    "read_subspace",
    "run_checks",
    "skew_form",
    "span",
    "split_generator",
    "star",
    "star_space",
    "two_level_max",
    "two_level_maxima",
    "unit",
    "upper_levels_commutative",
    "write_subspace",
    "zero",
    "zero_space",
]
