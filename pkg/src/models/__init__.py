from .descriptions import (
    FiltrationDescription,
    FiltrationKind,
    ReductionRecord,
    RingDescription,
)
from .reports import (
    CohomologyProfile,
    CorsoResult,
    EquivalenceEntry,
    GoodnessFailure,
    GoodnessReport,
    GradedInvariant,
    HilbertCoefficients,
    HSFunction,
    InvariantReport,
    ReplayReport,
    SelftestReport,
    SequenceReport,
)
from .certificate import (
    Certificate,
    CheckResult,
    InvariantSummary,
    SanitySample,
    Verdict,
)


__all__ = [
    "FiltrationDescription",
    "FiltrationKind",
    "ReductionRecord",
    "RingDescription",
    "CohomologyProfile",
    "CorsoResult",
    "EquivalenceEntry",
    "GoodnessFailure",
    "GoodnessReport",
    "GradedInvariant",
    "HilbertCoefficients",
    "HSFunction",
    "InvariantReport",
    "ReplayReport",
    "SelftestReport",
    "SequenceReport",
    "Certificate",
    "CheckResult",
    "InvariantSummary",
    "SanitySample",
    "Verdict",
]
