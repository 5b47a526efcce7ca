from .hilbert import (
    filtration_hilbert_coefficients,
    graded_colength,
    hilbert_coefficients,
    hilbert_polynomial_value,
    hs_function,
    multiplicity_of_filtration,
    multiplicity_parameter,
    parameter_power_multiplicity,
)

__all__ = [
    "filtration_hilbert_coefficients",
    "graded_colength",
    "hilbert_coefficients",
    "hilbert_polynomial_value",
    "hs_function",
    "multiplicity_of_filtration",
    "multiplicity_parameter",
    "parameter_power_multiplicity",
]
