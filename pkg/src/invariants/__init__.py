from .lab import (
    bsb_invariant_of_G,
    find_standard_sop,
    invariant_of_sop,
    invariant_on_G,
    is_d_sequence,
    is_standard_sop,
    is_usd_sequence,
    is_weak_sequence,
    ring_invariant,
    sample_sops,
)
from .cohomology import local_cohomology_lengths

__all__ = [
    "bsb_invariant_of_G",
    "find_standard_sop",
    "invariant_of_sop",
    "invariant_on_G",
    "is_d_sequence",
    "is_standard_sop",
    "is_usd_sequence",
    "is_weak_sequence",
    "ring_invariant",
    "sample_sops",
    "local_cohomology_lengths",
]
