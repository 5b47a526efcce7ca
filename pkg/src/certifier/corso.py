from loguru import logger

from ..filtrations import Filtration, ReductionCertificate
from ..models.reports import CorsoResult
from ..numerics import filtration_hilbert_coefficients
from ..rings import IdealHandle, QuotientRing, length


def corso_boundary_check(
    R: QuotientRing,
    I: IdealHandle,
    Q: ReductionCertificate,
    horizon: int | None = None,
) -> CorsoResult:
    """
    Compare e_1(I) - e_1(Q) with 2(e_0(I) - ℓ(A/I)) - ℓ(I/(I² + Q)).

    Both first coefficients come from fits of the adic Hilbert-Samuel
    functions; the correction term is ℓ(A/(I² + Q)) - ℓ(A/I).

    Args:
        R: The ring.
        I: An m-primary ideal.
        Q: A minimal reduction of the I-adic filtration.
        horizon: Optional fit horizon.
    """
    ideal_filtration = Filtration.adic(I)
    ideal_filtration.reduction = Q
    coefficients = filtration_hilbert_coefficients(ideal_filtration, horizon)
    reduction_filtration = Filtration.adic(Q.ideal(R))
    reduction_coefficients = filtration_hilbert_coefficients(reduction_filtration, horizon)

    colength = length(R, I)
    correction = length(R, I**2 + Q.ideal(R)) - colength
    lhs = coefficients.e1 - reduction_coefficients.e1
    rhs = 2 * (coefficients.e0 - colength) - correction
    logger.debug(f"Corso check on {I}: lhs={lhs}, rhs={rhs}")
    return CorsoResult(
        lhs=lhs,
        rhs=rhs,
        holds_geq=lhs >= rhs,
        equal=lhs == rhs,
        e0=coefficients.e0,
        e1_ideal=coefficients.e1,
        e1_reduction=reduction_coefficients.e1,
        colength=colength,
        correction=correction,
    )
