"""
Invariants of systems of parameters and the sequence conditions behind them.

The invariant of a parameter ideal Q is ℓ(A/Q) - e(Q; A). On the associated
graded ring it is evaluated through the graded colength, with the
multiplicity taken from A.
"""

import random
from itertools import permutations, product
from math import prod
from typing import Sequence

from loguru import logger

from ..algebra.monomial import monomials_of_degree
from ..algebra.polynomial import Polynomial
from ..config import settings
from ..errors import AlgebraError, ConsistencyError, SequenceTooLongError
from ..filtrations import Filtration, ReductionCertificate, random_sop
from ..models.reports import GradedInvariant, InvariantReport
from ..numerics import graded_colength, multiplicity_parameter
from ..rings import IdealHandle, QuotientRing, is_parameter_ideal, length

MAX_USD_LENGTH = 4


def invariant_of_sop(R: QuotientRing, gens: Sequence[Polynomial]) -> InvariantReport:
    """
    ℓ(A/Q) - e(Q; A) for a parameter ideal Q.

    Raises:
        AlgebraError: If gens is not a system of parameters.
        ConsistencyError: If the difference is negative.
    """
    if not is_parameter_ideal(R, gens):
        raise AlgebraError(f"({', '.join(map(str, gens))}) is not a system of parameters")
    Q = IdealHandle(R, gens)
    ell = length(R, Q)
    e = multiplicity_parameter(R, Q)
    if ell < e:
        raise ConsistencyError(f"ℓ(A/Q) = {ell} is below e(Q) = {e} for Q = {Q}")
    return InvariantReport(
        subject=str(R),
        sop=[str(a) for a in gens],
        length=ell,
        multiplicity=e,
        value=ell - e,
    )


def is_standard_sop(R: QuotientRing, gens: Sequence[Polynomial]) -> bool:
    """Whether the invariant of Q equals that of the ideal of squares."""
    report = invariant_of_sop(R, gens)
    squares = IdealHandle(R, [a**2 for a in gens])
    squared_value = length(R, squares) - 2**R.dim * report.multiplicity
    return report.value == squared_value


def is_d_sequence(R: QuotientRing, seq: Sequence[Polynomial]) -> bool:
    """(q_{i-1} : a_i a_j) = (q_{i-1} : a_j) for all i <= j."""
    for i, a_i in enumerate(seq):
        q = IdealHandle(R, seq[:i])
        for a_j in seq[i:]:
            if q.colon(IdealHandle(R, [a_i * a_j])) != q.colon(IdealHandle(R, [a_j])):
                return False
    return True


def is_weak_sequence(R: QuotientRing, seq: Sequence[Polynomial]) -> bool:
    """(q_{i-1} : a_i) = (q_{i-1} : m) for every i."""
    m = R.maximal_ideal
    for i, a_i in enumerate(seq):
        q = IdealHandle(R, seq[:i])
        if q.colon(IdealHandle(R, [a_i])) != q.colon(m):
            return False
    return True


def is_usd_sequence(R: QuotientRing, seq: Sequence[Polynomial], m_bound: int) -> bool:
    """
    d-sequence property for every order and every exponent tuple up to m_bound.

    This certifies the unconditioned strong d-sequence property only on the
    bounded exponent range.

    Raises:
        SequenceTooLongError: For sequences longer than four elements.
    """
    if len(seq) > MAX_USD_LENGTH:
        raise SequenceTooLongError(
            f"u.s.d. sweep supports at most {MAX_USD_LENGTH} elements, got {len(seq)}"
        )
    for exps in product(range(1, m_bound + 1), repeat=len(seq)):
        powered = [a**n for a, n in zip(seq, exps)]
        for order in permutations(range(len(seq))):
            if not is_d_sequence(R, [powered[i] for i in order]):
                logger.debug(f"u.s.d. fails at exponents {exps}, order {order}")
                return False
    return True


def sample_sops(
    R: QuotientRing, trials: int, degree: int, rng: random.Random
) -> list[list[Polynomial]]:
    """Random homogeneous systems of parameters of the given degree."""
    pool = [R.ambient.monomial(e) for e in monomials_of_degree(R.ambient.nvars, degree)]
    sops: list[list[Polynomial]] = []
    attempts = 0
    while len(sops) < trials and attempts < 4 * trials:
        attempts += 1
        candidate = random_sop(R, pool, rng)
        if candidate is not None:
            sops.append(candidate)
    return sops


def find_standard_sop(
    R: QuotientRing,
    trials: int | None = None,
    powers: Sequence[int] | None = None,
    seed: int | None = None,
) -> list[Polynomial]:
    """
    A standard system of parameters among powers of random linear ones.

    Raises:
        ConsistencyError: If no standard sop is found.
    """
    trials = trials or settings.SAMPLE_TRIALS
    powers = powers or settings.STANDARD_SOP_POWERS
    rng = random.Random(settings.SEED if seed is None else seed)
    for sop in sample_sops(R, trials, 1, rng):
        for k in powers:
            candidate = [a**k for a in sop]
            if is_standard_sop(R, candidate):
                return candidate
    raise ConsistencyError(
        f"no standard system of parameters found for {R}; not generalized CM or schedule exhausted"
    )


def ring_invariant(
    R: QuotientRing, trials: int | None = None, seed: int | None = None
) -> InvariantReport:
    """The invariant of A, read off at a verified standard sop."""
    sop = find_standard_sop(R, trials, seed=seed)
    report = invariant_of_sop(R, sop)
    report.standard = True
    return report


def invariant_on_G(
    F: Filtration, Q: ReductionCertificate, exps: Sequence[int]
) -> InvariantReport:
    """
    The invariant of ((a_1 t)^{n_1}, ..., (a_d t)^{n_d}) on G.

    The multiplicity on G equals (Π n_i)·e(Q; A).
    """
    R = F.ring
    colength = graded_colength(F, Q.generators, 1, exps)
    e = prod(exps) * multiplicity_parameter(R, Q.ideal(R))
    return InvariantReport(
        subject=f"G({F})",
        sop=[str(a) for a in Q.generators],
        exponents=list(exps),
        length=colength,
        multiplicity=e,
        value=colength - e,
    )


def bsb_invariant_of_G(F: Filtration, Q: ReductionCertificate) -> GradedInvariant:
    """
    The invariant of G, detected as the first v(n) with v(n) = v(2n).

    When no such exponent appears in the schedule the largest value seen is
    returned as a lower bound, flagged as not certified.
    """
    d = F.ring.dim
    schedule = list(settings.G_INVARIANT_EXPONENTS)
    values: dict[int, int] = {}

    def v(n: int) -> int:
        if n not in values:
            values[n] = invariant_on_G(F, Q, [n] * d).value
        return values[n]

    for n in schedule:
        if 2 * n in schedule and v(n) == v(2 * n):
            return GradedInvariant(value=v(n), certified=True, detected_at=n, values=values)
    for n in schedule:
        v(n)
    logger.warning(f"⚠️  Invariant of G({F}) not certified; lower bound {max(values.values())}")
    return GradedInvariant(value=max(values.values()), certified=False, values=values)
