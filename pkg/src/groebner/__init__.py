from .buchberger import GroebnerBasis, compute_groebner_basis, normal_form
from .ideals import (
    FreeIdeal,
    artinian_length,
    groebner_basis,
    hilbert_function,
    ideal_colon,
    ideal_combine,
    ideal_contains,
    ideal_equals,
    ideal_intersection,
    ideal_power,
    ideal_saturation,
    is_zero_dimensional,
    krull_dimension,
    standard_monomials,
)

__all__ = [
    "GroebnerBasis",
    "compute_groebner_basis",
    "normal_form",
    "FreeIdeal",
    "artinian_length",
    "groebner_basis",
    "hilbert_function",
    "ideal_colon",
    "ideal_combine",
    "ideal_contains",
    "ideal_equals",
    "ideal_intersection",
    "ideal_power",
    "ideal_saturation",
    "is_zero_dimensional",
    "krull_dimension",
    "standard_monomials",
]
