from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from loguru import logger

from ..config import PipelineConfig
from ..errors import AlgebraError
from ..filtrations import Filtration, find_reduction
from ..invariants import bsb_invariant_of_G, ring_invariant
from ..models.reports import EquivalenceEntry, SelftestReport
from .checks import check_intersection_condition, sanity_sample


def _evaluate(label: str, F: Filtration, config: PipelineConfig) -> EquivalenceEntry:
    R = F.ring
    try:
        sample = sanity_sample(R, config.trials, config.seed)
        if not sample.all_standard:
            logger.warning(f"⚠️  Skipping {label}: sanity sample failed")
            return EquivalenceEntry(label=label, skipped=True, reason="sanity sample failed")
        reduction = F.reduction or find_reduction(
            F, config.reduction_trials, config.n_max, config.seed
        )
        graded = bsb_invariant_of_G(F, reduction)
        if not graded.certified:
            return EquivalenceEntry(
                label=label, skipped=True, reason="invariant of G not certified"
            )
        invariant_equality = graded.value == ring_invariant(R, config.trials, config.seed).value
        condition_holds = all(
            check.holds for check in check_intersection_condition(F, reduction, 1)
        )
    except AlgebraError as error:
        logger.warning(f"⚠️  Skipping {label}: {error}")
        return EquivalenceEntry(label=label, skipped=True, reason=str(error))
    entry = EquivalenceEntry(
        label=label,
        invariant_equality=invariant_equality,
        condition_holds=condition_holds,
    )
    if entry.agree is False:
        logger.error(f"❌ {label}: invariant equality {invariant_equality}, conditions {condition_holds}")
    return entry


def equivalence_selftest(
    battery: Sequence[tuple[str, Filtration]], config: PipelineConfig | None = None
) -> SelftestReport:
    """
    Compare the invariant equality with the intersection conditions on every
    battery entry. The two must agree; a divergence is reported, not raised.
    """
    config = config or PipelineConfig()
    with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
        entries = list(pool.map(lambda item: _evaluate(item[0], item[1], config), battery))
    report = SelftestReport(entries=entries)
    logger.info(
        f"Self-test: {len(entries)} entries, {len(report.divergences)} divergences, "
        f"{sum(entry.skipped for entry in entries)} skipped"
    )
    return report
