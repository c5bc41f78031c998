"""Factorization of non-commutative polynomials over exact fields."""

from .commutative import (
    ConstraintSystem,
    CPoly,
    SymbolRing,
    buchberger,
    enumerate_solutions,
    normal_form,
    reduce_groebner,
    s_polynomial,
)
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    NCFactorError,
    NotAGroebnerBasisError,
    ParseError,
    RefinementError,
    SearchSpaceTooLargeError,
    UnsupportedFieldError,
)
from .factoring import (
    DegreeSplit,
    FactorChain,
    FactorOptions,
    SymbolicFactorization,
    assemble_constraints,
    commutative_factor_degrees,
    factor_all,
    factor_bidegree,
    factor_completely,
    knapsack_splits,
)
from .fields import PrimeField, RationalField
from .freealg import (
    Alphabet,
    FreeAlgebra,
    NCPoly,
    concat,
    homogenize,
    left_quotient,
    normalize_pair,
    overlap_lengths,
    right_quotient,
)
from .homogeneous import factor_homogeneous, refine, select_pivot
from .oracle import brute_force_factor, chain_family, random_factorable
from .parsing import parse_expression

__all__ = [
    "Alphabet",
    "BudgetExceededError",
    "ConstraintSystem",
    "ContextMismatchError",
    "CPoly",
    "DegreeSplit",
    "FactorChain",
    "FactorOptions",
    "FreeAlgebra",
    "NCFactorError",
    "NCPoly",
    "NotAGroebnerBasisError",
    "ParseError",
    "PrimeField",
    "RationalField",
    "RefinementError",
    "SearchSpaceTooLargeError",
    "SymbolicFactorization",
    "SymbolRing",
    "UnsupportedFieldError",
    "assemble_constraints",
    "brute_force_factor",
    "buchberger",
    "commutative_factor_degrees",
    "concat",
    "enumerate_solutions",
    "factor_all",
    "factor_bidegree",
    "factor_completely",
    "factor_homogeneous",
    "homogenize",
    "knapsack_splits",
    "left_quotient",
    "chain_family",
    "normal_form",
    "normalize_pair",
    "overlap_lengths",
    "parse_expression",
    "random_factorable",
    "reduce_groebner",
    "refine",
    "right_quotient",
    "s_polynomial",
    "select_pivot",
]
