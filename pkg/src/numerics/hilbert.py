"""
Hilbert-Samuel functions, Hilbert coefficients and multiplicities.

Lengths on the associated graded ring are always evaluated through ideal
arithmetic in A; G is never presented as a ring.
"""

from math import comb, prod
from typing import Sequence

from loguru import logger
from sympy import Matrix, binomial

from ..algebra.polynomial import Polynomial
from ..config import settings
from ..errors import HorizonError
from ..filtrations import Filtration
from ..models.reports import HilbertCoefficients, HSFunction
from ..rings import IdealHandle, QuotientRing, length


def hs_function(F: Filtration, N: int) -> HSFunction:
    """
    The Hilbert-Samuel function n ↦ ℓ(A/I_n) for n = 0..N.

    Raises:
        NotMPrimaryError: If some I_n is not m-primary.
    """
    values = [length(F.ring, F.ideal(n)) for n in range(N + 1)]
    return HSFunction(values=values, horizon=N, filtration=F)


def _basis_row(n: int, d: int) -> list:
    return [(-1) ** i * binomial(n + d - 1 - i, d - i) for i in range(d + 1)]


def hilbert_polynomial_value(e: Sequence[int], n: int) -> int:
    """Σ (-1)^i e_i binom(n + d - 1 - i, d - i) with d = len(e) - 1."""
    d = len(e) - 1
    return int(sum(c * e_i for c, e_i in zip(_basis_row(n, d), e)))


def hilbert_coefficients(H: HSFunction, d: int) -> HilbertCoefficients:
    """
    Fit e_0..e_d on the last d+1 values and verify on the two before them.

    Raises:
        HorizonError: If the horizon is too short for the fit, the solution
            is not integral, or a held-out point disagrees.
    """
    N = H.horizon
    lo = N - d
    if lo - 2 < 1:
        raise HorizonError(f"horizon {N} too short for a dimension {d} fit")
    rows = Matrix([_basis_row(n, d) for n in range(lo, N + 1)])
    rhs = Matrix([H.values[n] for n in range(lo, N + 1)])
    solution = rows.LUsolve(rhs)
    if any(not value.is_integer for value in solution):
        raise HorizonError(f"non-integral Hilbert coefficients {list(solution)} at horizon {N}")
    e = [int(value) for value in solution]
    for n in (lo - 1, lo - 2):
        if hilbert_polynomial_value(e, n) != H.values[n]:
            raise HorizonError(
                f"fit {e} misses ℓ(A/I_{n}) = {H.values[n]}; horizon {N} too short"
            )
    return HilbertCoefficients(e=e, fit_window=(lo, N), verified=True, horizon=N)


def filtration_hilbert_coefficients(F: Filtration, N: int | None = None) -> HilbertCoefficients:
    """
    Hilbert coefficients of F, doubling the horizon on failure.

    The default horizon is d(r + 4) + 10 with r the known reduction number
    (0 when none is attached).
    """
    d = F.ring.dim
    r = F.reduction.r if F.reduction is not None else 0
    horizon = N or settings.default_horizon(d, r)
    for attempt in range(settings.NUMERICS_RETRIES + 1):
        try:
            return hilbert_coefficients(hs_function(F, horizon), d)
        except HorizonError as error:
            if attempt == settings.NUMERICS_RETRIES:
                raise
            logger.debug(f"{error}; retrying with horizon {2 * horizon}")
            horizon *= 2
    raise AssertionError("unreachable")


def multiplicity_of_filtration(F: Filtration, N: int | None = None) -> int:
    return filtration_hilbert_coefficients(F, N).e0


def _difference(values: Sequence[int], n: int, d: int) -> int:
    return sum((-1) ** (d - j) * comb(d, j) * values[n + j] for j in range(d + 1))


def multiplicity_parameter(
    R: QuotientRing, Q: IdealHandle, horizon: int | None = None
) -> int:
    """
    e(Q; A) as the stable d-th finite difference of n ↦ ℓ(A/Q^{n+1}).

    Stability is required over three consecutive n.

    Raises:
        HorizonError: If no stable window appears within the horizon.
    """
    d = R.dim
    limit = horizon or settings.default_horizon(d, 0)

    def compute() -> int:
        values: list[int] = []
        power = Q.normalized()
        for n in range(limit + d + 3):
            values.append(length(R, power))
            power = (power * Q).normalized()
            if n >= d + 2:
                k = n - d - 2
                window = [_difference(values, k + i, d) for i in range(3)]
                if window[0] == window[1] == window[2]:
                    return window[0]
        raise HorizonError(f"multiplicity of {Q} did not stabilize within {limit}")

    return R.cached("multiplicity", Q.key(), compute)


def graded_colength(
    F: Filtration,
    gens: Sequence[Polynomial],
    p: int,
    exps: Sequence[int],
    horizon: int | None = None,
) -> int:
    """
    ℓ(G / ((a_1 t^p)^{n_1}, ..., (a_d t^p)^{n_d}) G) through ideal arithmetic in A.

    Sums ℓ(A/L_k) - ℓ(A/I_k) with L_k = Σ a_i^{n_i} I_{k - p n_i} + I_{k+1}
    until the summand has vanished in enough consecutive degrees that it
    vanishes from then on.

    Raises:
        HorizonError: If the series has not vanished within the horizon.
    """
    R = F.ring
    d = R.dim
    powers = [IdealHandle(R, [a**n]) for a, n in zip(gens, exps)]
    window = max(d, F.beta or 1)
    r = F.reduction.r if F.reduction is not None else 0
    limit = horizon or settings.default_horizon(d, r) + p * sum(exps)
    total, zeros = 0, 0
    for k in range(limit + 1):
        L = F.ideal(k + 1)
        for power, n in zip(powers, exps):
            if k - p * n >= 0:
                L = L + power * F.ideal(k - p * n)
        summand = length(R, L) - length(R, F.ideal(k))
        total += summand
        zeros = zeros + 1 if summand == 0 else 0
        if zeros >= window and k >= p * max(exps):
            logger.debug(f"Graded colength {total} settled at k={k}")
            return total
    raise HorizonError(f"graded colength did not settle within {limit} degrees")


def parameter_power_multiplicity(R: QuotientRing, gens: Sequence[Polynomial], exps: Sequence[int]) -> int:
    """e((a_1^{n_1}, ..., a_d^{n_d})) = (Π n_i)·e((a_1, ..., a_d))."""
    return prod(exps) * multiplicity_parameter(R, IdealHandle(R, gens))
