from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from .descriptions import FiltrationDescription, ReductionRecord, RingDescription
from .reports import CohomologyProfile, CorsoResult


class Verdict(str, Enum):
    G_BUCHSBAUM = "G_BUCHSBAUM"
    EQUALITY_FAILS = "EQUALITY_FAILS"
    INPUT_SANITY_FAIL = "INPUT_SANITY_FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class CheckResult(BaseModel):
    name: str
    n: int
    holds: bool


class SanitySample(BaseModel):
    """Standardness sample over random sops from m (linear) and m² (quadratic)."""

    trials: int
    all_standard: bool
    linear_passed: bool
    quadratic_passed: bool
    values: list[int] = Field(default_factory=list)
    sops: list[list[str]] = Field(default_factory=list)


class InvariantSummary(BaseModel):
    I_A: int | None = None
    I_G: int | None = None
    I_G_certified: bool = False
    I_G_detected_at: int | None = None
    h: CohomologyProfile | None = None
    h_applies_to_G: bool = False


class Certificate(BaseModel):
    """Machine-readable verdict of a certification run."""

    ring: RingDescription
    filtration: FiltrationDescription
    d: int
    r: int | None = None
    beta: int | None = None
    reduction: ReductionRecord | None = None
    buchsbaum_sample: SanitySample | None = None
    checks: list[CheckResult] = Field(default_factory=list)
    check_exponent: int = 1
    invariants: InvariantSummary = Field(default_factory=InvariantSummary)
    verdict: Verdict = Verdict.INCONCLUSIVE
    reasons: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    corso: CorsoResult | None = None
    seed: int = 0

    model_config = ConfigDict(use_enum_values=True, validate_assignment=True, validate_default=True)

    @property
    def conditions_hold(self) -> bool:
        return all(check.holds for check in self.checks)
