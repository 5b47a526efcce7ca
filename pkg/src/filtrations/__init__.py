from .filtration import (
    Filtration,
    ReductionCertificate,
    filtration_ideal,
    intersection_equalities,
    quotient_filtration,
    validate_goodness,
)
from .ratliff_rush import ratliff_rush
from .reduction import find_reduction, random_combination, random_sop, reduction_number

__all__ = [
    "Filtration",
    "ReductionCertificate",
    "filtration_ideal",
    "intersection_equalities",
    "quotient_filtration",
    "validate_goodness",
    "ratliff_rush",
    "find_reduction",
    "random_combination",
    "random_sop",
    "reduction_number",
]
