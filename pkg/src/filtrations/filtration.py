"""I-good filtrations of a quotient ring and their goodness checks."""

import threading
from dataclasses import dataclass
from typing import Sequence

from loguru import logger

from ..algebra.polynomial import Polynomial
from ..errors import FiltrationError
from ..models.descriptions import FiltrationDescription, FiltrationKind, ReductionRecord
from ..models.reports import GoodnessFailure, GoodnessReport
from ..rings import IdealHandle, QuotientRing, slice_ring


@dataclass(frozen=True)
class ReductionCertificate:
    """Q = (a_1, ..., a_d) with I_{n+1} = Q·I_n verified for r <= n <= verified_up_to."""

    generators: tuple[Polynomial, ...]
    r: int
    verified_up_to: int
    trials_used: int = 1

    def ideal(self, ring: QuotientRing) -> IdealHandle:
        return IdealHandle(ring, self.generators)

    def powers(self, exponent: int) -> tuple[Polynomial, ...]:
        return tuple(a**exponent for a in self.generators)

    def to_record(self) -> ReductionRecord:
        return ReductionRecord(
            generators=[str(a) for a in self.generators],
            r=self.r,
            verified_up_to=self.verified_up_to,
            trials_used=self.trials_used,
        )

    @classmethod
    def from_record(cls, ring: QuotientRing, record: ReductionRecord) -> "ReductionCertificate":
        return cls(
            tuple(ring.ambient.parse(text) for text in record.generators),
            record.r,
            record.verified_up_to,
            record.trials_used,
        )


class Filtration:
    """
    A filtration n ↦ I_n of a quotient ring.

    Kinds:
        adic: I_n = I^n.
        table: I_1..I_s stored, I_n = Q·I_{n-1} beyond s; r is the claimed
            reduction number.
        ratliff_rush: I_n is the Ratliff-Rush closure of I^n.
        quotient: image of a parent filtration on A/(a^e).

    Members are materialized on demand into an append-only cache.
    """

    def __init__(
        self,
        ring: QuotientRing,
        kind: FiltrationKind,
        ideals: Sequence[IdealHandle],
        table_reduction: IdealHandle | None = None,
        claimed_r: int | None = None,
        parent: "Filtration | None" = None,
        slice_element: Polynomial | None = None,
        slice_exponent: int | None = None,
    ):
        if not ideals:
            raise FiltrationError("a filtration needs at least I_1")
        for handle in ideals:
            if handle.ring is not ring:
                raise FiltrationError("filtration ideals must live in the filtration ring")
        self.ring = ring
        self.kind = FiltrationKind(kind)
        self.ideals = tuple(ideals)
        self.table_reduction = table_reduction
        self.claimed_r = claimed_r
        self.parent = parent
        self.slice_element = slice_element
        self.slice_exponent = slice_exponent
        self.reduction: ReductionCertificate | None = None
        self._cache: dict[int, IdealHandle] = {0: ring.unit_ideal()}
        self._lock = threading.Lock()

    @classmethod
    def adic(cls, I: IdealHandle) -> "Filtration":
        return cls(I.ring, FiltrationKind.ADIC, [I])

    @classmethod
    def table(cls, ideals: Sequence[IdealHandle], Q: IdealHandle, r: int) -> "Filtration":
        if r < 0:
            raise FiltrationError("reduction number must be non-negative")
        return cls(ideals[0].ring, FiltrationKind.TABLE, ideals, Q, r)

    @classmethod
    def ratliff_rush(cls, I: IdealHandle) -> "Filtration":
        return cls(I.ring, FiltrationKind.RATLIFF_RUSH, [I])

    @property
    def generating_ideal(self) -> IdealHandle:
        return self.ideals[0]

    @property
    def beta(self) -> int | None:
        """A bound β with I_{n+1} = I_1·I_n for n >= β, when known."""
        if self.kind == FiltrationKind.ADIC:
            return 1
        if self.kind == FiltrationKind.TABLE:
            return len(self.ideals)
        if self.kind == FiltrationKind.QUOTIENT and self.parent is not None:
            return self.parent.beta
        return None

    def ideal(self, n: int) -> IdealHandle:
        if n < 0:
            raise FiltrationError(f"filtration index {n} is negative")
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        handle = self._materialize(n).normalized()
        with self._lock:
            return self._cache.setdefault(n, handle)

    def _materialize(self, n: int) -> IdealHandle:
        if self.kind == FiltrationKind.ADIC:
            return self.ideal(n - 1) * self.generating_ideal
        if self.kind == FiltrationKind.TABLE:
            if n <= len(self.ideals):
                handle = self.ideals[n - 1]
            else:
                assert self.table_reduction is not None
                handle = self.table_reduction * self.ideal(n - 1)
            if n >= 2:
                self._warn_if_not_good(n, handle)
            return handle
        if self.kind == FiltrationKind.RATLIFF_RUSH:
            from .ratliff_rush import ratliff_rush

            return ratliff_rush(self.ring, self.generating_ideal**n)
        assert self.parent is not None
        return IdealHandle(self.ring, self.parent.ideal(n).gens)

    def _warn_if_not_good(self, n: int, handle: IdealHandle) -> None:
        previous = self.ideal(n - 1)
        if not previous.contains_ideal(handle):
            logger.warning(f"⚠️  Table filtration: I_{n} is not contained in I_{n - 1}")
        if not handle.contains_ideal(self.ideal(1) * previous):
            logger.warning(f"⚠️  Table filtration: I_1·I_{n - 1} is not contained in I_{n}")

    @classmethod
    def from_description(
        cls, ring: QuotientRing, description: FiltrationDescription
    ) -> "Filtration":
        """Rebuild a filtration over ring from its recorded text."""
        kind = FiltrationKind(description.kind)
        ideals = [ring.ideal(texts) for texts in description.ideals]
        if kind == FiltrationKind.ADIC:
            return cls.adic(ideals[0])
        if kind == FiltrationKind.RATLIFF_RUSH:
            return cls.ratliff_rush(ideals[0])
        if kind == FiltrationKind.TABLE:
            if description.table_reduction is None or description.claimed_r is None:
                raise FiltrationError("table description without its reduction")
            return cls.table(
                ideals, ring.ideal(description.table_reduction), description.claimed_r
            )
        if (
            description.parent is None
            or description.parent_ring is None
            or description.slice_element is None
            or description.slice_exponent is None
        ):
            raise FiltrationError("quotient description without its parent")
        parent_ring = QuotientRing.from_description(description.parent_ring)
        parent = cls.from_description(parent_ring, description.parent)
        return quotient_filtration(
            parent,
            parent_ring.ambient.parse(description.slice_element),
            description.slice_exponent,
        )

    def describe(self) -> FiltrationDescription:
        return FiltrationDescription(
            kind=self.kind,
            ideals=[handle.texts() for handle in self.ideals],
            table_reduction=self.table_reduction.texts() if self.table_reduction else None,
            claimed_r=self.claimed_r,
            slice_element=str(self.slice_element) if self.slice_element is not None else None,
            slice_exponent=self.slice_exponent,
            parent=self.parent.describe() if self.parent is not None else None,
            parent_ring=self.parent.ring.describe() if self.parent is not None else None,
        )

    def __str__(self) -> str:
        if self.kind == FiltrationKind.TABLE:
            return f"table({len(self.ideals)} ideals, r={self.claimed_r})"
        if self.kind == FiltrationKind.QUOTIENT:
            return f"{self.parent} mod ({self.slice_element})^{self.slice_exponent}"
        return f"{self.kind.value}({self.generating_ideal})"


def filtration_ideal(F: Filtration, n: int) -> IdealHandle:
    return F.ideal(n)


def reduction_number(F: Filtration, Q: IdealHandle, n_max: int) -> int | None:
    """
    Least r <= n_max with I_{n+1} = Q·I_n for every r <= n <= n_max.

    Returns None when the equality already fails at n_max.
    """
    r = None
    for n in range(n_max, -1, -1):
        if F.ideal(n + 1) != Q * F.ideal(n):
            break
        r = n
    return r


def _reduction_for_check(F: Filtration) -> tuple[IdealHandle, int] | None:
    if F.reduction is not None:
        return F.reduction.ideal(F.ring), F.reduction.r
    if F.table_reduction is not None and F.claimed_r is not None:
        return F.table_reduction, F.claimed_r
    return None


def validate_goodness(F: Filtration, bound: int) -> GoodnessReport:
    """
    Check the filtration axioms up to a bound.

    For 0 <= n <= bound: I_{n+1} ⊆ I_n and I_1·I_n ⊆ I_{n+1}; with a known
    reduction (Q, r) also I_{n+1} = Q·I_n for r <= n <= bound. The first
    failing check is recorded; failures are not raised.
    """
    if bound < 1:
        raise FiltrationError("goodness bound must be at least 1")
    report = GoodnessReport(bound=bound)
    reduction = _reduction_for_check(F)
    report.reduction_checked = reduction is not None
    first = F.ideal(1)
    for n in range(bound + 1):
        current, following = F.ideal(n), F.ideal(n + 1)
        report.checks_run += 1
        if not current.contains_ideal(following):
            report.first_failure = GoodnessFailure(check="descending", n=n)
            return report
        report.checks_run += 1
        if not following.contains_ideal(first * current):
            report.first_failure = GoodnessFailure(check="multiplicative", n=n)
            return report
        if reduction is not None and n >= reduction[1]:
            report.checks_run += 1
            if following != reduction[0] * current:
                report.first_failure = GoodnessFailure(check="reduction", n=n)
                return report
    logger.debug(f"Goodness of {F} verified to {bound}")
    return report


def intersection_equalities(
    F: Filtration, Q: ReductionCertificate, horizon: int
) -> list[tuple[int, bool]]:
    """Q ∩ I_k = Q·I_{k-1} for 1 <= k <= horizon."""
    q = Q.ideal(F.ring)
    return [
        (k, q.intersect(F.ideal(k)) == q * F.ideal(k - 1)) for k in range(1, horizon + 1)
    ]


def quotient_filtration(F: Filtration, a: Polynomial, e: int) -> Filtration:
    """
    The image filtration (I_n + (a^e))/(a^e) on A/(a^e).

    Raises:
        FiltrationError: If e < 1 or a is not in I_1.
    """
    if e < 1:
        raise FiltrationError("slice exponent must be positive")
    if not F.ideal(1).contains(a):
        raise FiltrationError(f"{a} is not in I_1")
    ring = slice_ring(F.ring, a**e)
    image = Filtration(
        ring,
        FiltrationKind.QUOTIENT,
        [IdealHandle(ring, F.ideal(1).gens)],
        parent=F,
        slice_element=a,
        slice_exponent=e,
    )
    if F.reduction is not None and a in F.reduction.generators:
        remaining = tuple(g for g in F.reduction.generators if g != a)
        bound = F.reduction.verified_up_to
        r = reduction_number(image, IdealHandle(ring, remaining), bound)
        if r is None:
            logger.debug(f"Image reduction fails at n={bound} on {ring}; none attached")
        else:
            image.reduction = ReductionCertificate(remaining, r, bound)
    return image
