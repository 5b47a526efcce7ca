from loguru import logger

from ..config import settings
from ..errors import IterationCapError
from ..rings import IdealHandle, QuotientRing, h0_length


def ratliff_rush(R: QuotientRing, I: IdealHandle, cap: int | None = None) -> IdealHandle:
    """
    The Ratliff-Rush closure of I as the stable value of (I^{k+1} : I^k).

    Args:
        R: Ring containing I.
        I: An m-primary ideal.
        cap: Maximum number of colon steps. Defaults to settings.

    Returns:
        The closure, normalized.

    Raises:
        IterationCapError: If the chain does not repeat within cap steps.
    """
    cap = settings.RATLIFF_RUSH_CAP if cap is None else cap
    torsion, _ = h0_length(R)
    if torsion:
        logger.warning(f"⚠️  Ratliff-Rush closure over {R}, which has depth 0")

    power = I.normalized()
    following = (power * I).normalized()
    previous = following.colon(power).normalized()
    for k in range(2, cap + 1):
        power, following = following, (following * I).normalized()
        current = following.colon(power).normalized()
        if current == previous:
            logger.debug(f"Ratliff-Rush chain of {I} repeated at k={k}")
            return previous
        previous = current
    raise IterationCapError(f"Ratliff-Rush chain of {I} did not stabilize within {cap} steps")
