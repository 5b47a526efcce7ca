from typing import Any

from pydantic import BaseModel, Field


class GoodnessFailure(BaseModel):
    check: str
    n: int


class GoodnessReport(BaseModel):
    """Outcome of a goodness validation; `first_failure` is None when every check held."""

    bound: int
    checks_run: int = 0
    first_failure: GoodnessFailure | None = None
    reduction_checked: bool = False

    @property
    def passed(self) -> bool:
        return self.first_failure is None


class HSFunction(BaseModel):
    """values[n] = ℓ(A/I_n) for n = 0..horizon."""

    values: list[int]
    horizon: int
    filtration: Any = Field(default=None, exclude=True, repr=False)


class HilbertCoefficients(BaseModel):
    e: list[int]
    fit_window: tuple[int, int]
    verified: bool
    horizon: int

    @property
    def e0(self) -> int:
        return self.e[0]

    @property
    def e1(self) -> int:
        return self.e[1] if len(self.e) > 1 else 0


class InvariantReport(BaseModel):
    """ℓ(·/Q·) - e(Q) for one system of parameters, on A or on G."""

    subject: str
    sop: list[str]
    exponents: list[int] | None = None
    length: int
    multiplicity: int
    value: int
    standard: bool | None = None
    usd_checked_to: int | None = None


class GradedInvariant(BaseModel):
    """The invariant of G, with the exponent at which standardness was detected."""

    value: int
    certified: bool
    detected_at: int | None = None
    values: dict[int, int] = Field(default_factory=dict)


class CohomologyProfile(BaseModel):
    h: list[int]
    bsb_invariant: int
    slicing_exponent: int | None = None


class SequenceReport(BaseModel):
    sequence: list[str]
    d_sequence: bool
    weak_sequence: bool
    usd_sequence: bool
    usd_bound: int


class CorsoResult(BaseModel):
    lhs: int
    rhs: int
    holds_geq: bool
    equal: bool
    e0: int
    e1_ideal: int
    e1_reduction: int
    colength: int
    correction: int
    escalated: bool = False
    implication: str | None = None


class EquivalenceEntry(BaseModel):
    label: str
    invariant_equality: bool | None = None
    condition_holds: bool | None = None
    skipped: bool = False
    reason: str | None = None

    @property
    def agree(self) -> bool | None:
        if self.skipped:
            return None
        return self.invariant_equality == self.condition_holds


class SelftestReport(BaseModel):
    entries: list[EquivalenceEntry] = Field(default_factory=list)

    @property
    def divergences(self) -> list[EquivalenceEntry]:
        return [entry for entry in self.entries if entry.agree is False]

    @property
    def passed(self) -> bool:
        return not self.divergences


class ReplayReport(BaseModel):
    mismatches: list[str] = Field(default_factory=list)
    checks_replayed: int = 0

    @property
    def matches(self) -> bool:
        return not self.mismatches
