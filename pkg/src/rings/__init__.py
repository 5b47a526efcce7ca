from .quotient import (
    IdealHandle,
    QuotientRing,
    h0_length,
    ideal_in,
    is_m_primary,
    is_parameter_ideal,
    length,
    minimal_generator_count,
    purify,
    slice_ring,
)

__all__ = [
    "IdealHandle",
    "QuotientRing",
    "h0_length",
    "ideal_in",
    "is_m_primary",
    "is_parameter_ideal",
    "length",
    "minimal_generator_count",
    "purify",
    "slice_ring",
]
