"""Randomized search for a reduction of a filtration, with verification."""

import random
from typing import Sequence

from loguru import logger

from ..algebra.polynomial import Polynomial
from ..config import settings
from ..errors import ReductionNotFoundError
from ..rings import IdealHandle, QuotientRing, is_parameter_ideal
from .filtration import Filtration, ReductionCertificate, reduction_number


def random_combination(
    gens: Sequence[Polynomial], rng: random.Random, p: int
) -> Polynomial:
    """A random F_p-linear combination of gens."""
    result = gens[0].ring.zero()
    for g in gens:
        result = result + g.scale(rng.randrange(p))
    return result


def random_sop(
    R: QuotientRing, pool: Sequence[Polynomial], rng: random.Random
) -> list[Polynomial] | None:
    """d random combinations of pool, or None when they fail to be a parameter ideal."""
    candidate = [random_combination(pool, rng, R.ambient.p) for _ in range(R.dim)]
    if any(not a for a in candidate) or not is_parameter_ideal(R, candidate):
        return None
    return candidate


def find_reduction(
    F: Filtration,
    trials: int | None = None,
    n_max: int | None = None,
    seed: int | None = None,
) -> ReductionCertificate:
    """
    Find a reduction Q = (a_1, ..., a_d) ⊆ I_1 of F.

    The first half of the trials combines the generators of I_1 of minimal
    degree, the rest combine across all degrees. A candidate is accepted
    when it is a parameter ideal and I_{n+1} = Q·I_n holds from some r on,
    up to n_max; the smallest such r is returned.

    Args:
        F: Filtration with I_1 available.
        trials: Number of random candidates. Defaults to settings.
        n_max: Scan bound. Defaults to 2d + 10.
        seed: Seed for the candidate generator.

    Raises:
        ReductionNotFoundError: If no candidate verifies.
    """
    R = F.ring
    trials = trials or settings.REDUCTION_TRIALS
    n_max = n_max or settings.default_n_max(R.dim)
    rng = random.Random(settings.SEED if seed is None else seed)

    gens = list(F.ideal(1).gens)
    low = min(g.degree for g in gens)
    homogeneous_pool = [g for g in gens if g.is_homogeneous() and g.degree == low]
    same_degree = len(homogeneous_pool) == len(gens)

    for trial in range(trials):
        pool = homogeneous_pool if (same_degree or trial < (trials + 1) // 2) else gens
        if not pool:
            pool = gens
        candidate = random_sop(R, pool, rng)
        if candidate is None:
            logger.debug(f"Reduction trial {trial}: not a parameter ideal")
            continue
        r = reduction_number(F, IdealHandle(R, candidate), n_max)
        if r is None:
            logger.debug(f"Reduction trial {trial}: equality fails at n={n_max}")
            continue
        logger.debug(f"Reduction found at trial {trial} with r={r}")
        certificate = ReductionCertificate(tuple(candidate), r, n_max, trial + 1)
        F.reduction = certificate
        return certificate

    raise ReductionNotFoundError(
        f"no reduction of {F} found in {trials} trials up to n={n_max}; "
        "possibly no degree-compatible reduction exists"
    )
