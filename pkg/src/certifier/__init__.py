from .checks import check_intersection_condition, sample_from_sops, sanity_sample
from .corso import corso_boundary_check
from .orchestrator import (
    BuchsbaumCertifier,
    certify_buchsbaum_G,
    create_certifier,
    derive_verdict,
)
from .replay import replay_certificate
from .selftest import equivalence_selftest

__all__ = [
    "check_intersection_condition",
    "sample_from_sops",
    "sanity_sample",
    "corso_boundary_check",
    "BuchsbaumCertifier",
    "certify_buchsbaum_G",
    "create_certifier",
    "derive_verdict",
    "replay_certificate",
    "equivalence_selftest",
]
