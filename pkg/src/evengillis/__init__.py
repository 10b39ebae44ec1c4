"""Exact multiset derangement counts and Laguerre linearization coefficients."""

__version__ = "0.1.0"

from .exact_core import ExactRational, binomial, factorial
from .laguerre import Polynomial, laguerre, laguerre_explicit, poly_add, poly_mul
from .integration import exp_moment, integrate_exp_weight
from .derangements import (
    DEFAULT_GUARD,
    GuardExceeded,
    MultisetSpec,
    classical_derangements,
    multiset_derangements_enum,
    multiset_derangements_ie,
    multiset_permutations,
)
from .linearization import (
    IdentityReport,
    linearization_coefficient,
    orthonormality_check,
    verify_identity,
    verify_range,
)

__all__ = [
    "ExactRational",
    "binomial",
    "factorial",
    "Polynomial",
    "laguerre",
    "laguerre_explicit",
    "poly_add",
    "poly_mul",
    "exp_moment",
    "integrate_exp_weight",
    "DEFAULT_GUARD",
    "GuardExceeded",
    "MultisetSpec",
    "classical_derangements",
    "multiset_derangements_enum",
    "multiset_derangements_ie",
    "multiset_permutations",
    "IdentityReport",
    "linearization_coefficient",
    "orthonormality_check",
    "verify_identity",
    "verify_range",
]
