import random
from math import ceil

from loguru import logger

from ..algebra.polynomial import Polynomial
from ..filtrations import Filtration, ReductionCertificate
from ..invariants import invariant_of_sop, is_standard_sop, sample_sops
from ..models.certificate import CheckResult, SanitySample
from ..rings import IdealHandle, QuotientRing


def check_intersection_condition(
    F: Filtration, Q: ReductionCertificate, m: int = 1
) -> list[CheckResult]:
    """
    (a_1^{2m}, ..., a_d^{2m}) ∩ I_n = (a_1^{2m}, ..., a_d^{2m})·I_{n-2m}
    for 2m < n <= d(2m - 1) + r.

    An empty range is a vacuous pass.
    """
    R = F.ring
    d = R.dim
    q = IdealHandle(R, Q.powers(2 * m))
    results = []
    for n in range(2 * m + 1, d * (2 * m - 1) + Q.r + 1):
        holds = q.intersect(F.ideal(n)) == q * F.ideal(n - 2 * m)
        logger.debug(f"Intersection condition at n={n}: {holds}")
        results.append(CheckResult(name=f"intersection_{2 * m}", n=n, holds=holds))
    return results


def _half_passes(R: QuotientRing, sops: list[list[Polynomial]]) -> tuple[bool, list[int]]:
    values = []
    passed = True
    for sop in sops:
        values.append(invariant_of_sop(R, sop).value)
        if not is_standard_sop(R, sop):
            passed = False
    return passed and len(set(values)) <= 1, values


def sample_from_sops(
    R: QuotientRing, linear: list[list[Polynomial]], quadratic: list[list[Polynomial]]
) -> SanitySample:
    """Standardness and invariants of given sops from m and from m²."""
    linear_passed, linear_values = _half_passes(R, linear)
    quadratic_passed, quadratic_values = _half_passes(R, quadratic)
    values = linear_values + quadratic_values
    return SanitySample(
        trials=len(linear) + len(quadratic),
        all_standard=linear_passed and quadratic_passed and len(set(values)) <= 1,
        linear_passed=linear_passed,
        quadratic_passed=quadratic_passed,
        values=values,
        sops=[[str(a) for a in sop] for sop in linear + quadratic],
    )


def sanity_sample(R: QuotientRing, trials: int, seed: int) -> SanitySample:
    """
    Best-effort falsification of Buchsbaumness of A.

    Half the sops are drawn from m, half from m². The sample passes when
    every sop is standard and all invariants agree.
    """
    rng = random.Random(seed)
    linear = sample_sops(R, ceil(trials / 2), 1, rng)
    quadratic = sample_sops(R, trials - len(linear), 2, rng) if trials > 1 else []
    return sample_from_sops(R, linear, quadratic)
