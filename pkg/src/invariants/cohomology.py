from math import comb

from loguru import logger

from ..config import settings
from ..errors import ConsistencyError
from ..models.reports import CohomologyProfile
from ..rings import QuotientRing, h0_length, slice_ring
from .lab import find_standard_sop, invariant_of_sop


def local_cohomology_lengths(
    R: QuotientRing, trials: int | None = None, seed: int | None = None
) -> CohomologyProfile:
    """
    Lengths h^0..h^{d-1} of the local cohomology of A by slicing.

    h^0 is the length of H⁰_m(A). For d >= 2 an element a of a standard sop
    is sliced as A/(a^m) for m in a small schedule, the profile of the slice
    is computed recursively and h^{i+1}(A) = h^i(A/(a^m)) - h^i(A). A
    profile is accepted once two consecutive m agree and the binomial sum
    matches the invariant of A.

    Raises:
        ConsistencyError: If A is not generalized Cohen-Macaulay or the
            schedule is exhausted.
    """
    sop = find_standard_sop(R, trials, seed=seed)
    invariant = invariant_of_sop(R, sop).value
    d = R.dim
    h0, _ = h0_length(R)

    if d == 1:
        if h0 != invariant:
            raise ConsistencyError(f"h^0 = {h0} but the invariant of {R} is {invariant}")
        return CohomologyProfile(h=[h0], bsb_invariant=invariant)

    a = sop[0]
    previous: list[int] | None = None
    for m in settings.COHOMOLOGY_SLICE_EXPONENTS:
        sliced = local_cohomology_lengths(slice_ring(R, a**m), trials, seed)
        h = [h0]
        for i in range(d - 1):
            h.append(sliced.h[i] - h[i])
        logger.debug(f"Slicing {R} by ({a})^{m}: h = {h}")
        if h == previous and sum(comb(d - 1, i) * h_i for i, h_i in enumerate(h)) == invariant:
            return CohomologyProfile(h=h, bsb_invariant=invariant, slicing_exponent=m)
        previous = h
    raise ConsistencyError(
        f"cohomology profile of {R} did not stabilize; not generalized CM or slicing schedule exhausted"
    )
