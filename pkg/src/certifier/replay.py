from math import ceil

from loguru import logger

from ..filtrations import Filtration, ReductionCertificate, reduction_number
from ..invariants import bsb_invariant_of_G, local_cohomology_lengths, ring_invariant
from ..models.certificate import Certificate, InvariantSummary
from ..models.reports import ReplayReport
from ..rings import QuotientRing
from .checks import check_intersection_condition, sample_from_sops
from .corso import corso_boundary_check
from .orchestrator import derive_verdict


def replay_certificate(certificate: Certificate) -> ReplayReport:
    """
    Rebuild ring, filtration and reduction from a certificate's text and
    recompute every recorded boolean and integer.

    The verdict is re-derived for completed runs, that is when I(G) is
    recorded and the cohomology profile was either computed or not asked for.

    Returns:
        A report listing each mismatch.
    """
    report = ReplayReport()
    ring = QuotientRing.from_description(certificate.ring)
    F = Filtration.from_description(ring, certificate.filtration)
    ring = F.ring

    def compare(name: str, recorded: object, replayed: object) -> None:
        report.checks_replayed += 1
        if recorded != replayed:
            report.mismatches.append(f"{name}: recorded {recorded}, replayed {replayed}")

    compare("d", certificate.d, ring.dim)
    sample = certificate.buchsbaum_sample
    replayed_sample = None
    if sample is not None:
        sops = [[ring.ambient.parse(text) for text in sop] for sop in sample.sops]
        split = ceil(len(sops) / 2)
        replayed_sample = sample_from_sops(ring, sops[:split], sops[split:])
        compare("buchsbaum_sample.trials", sample.trials, replayed_sample.trials)
        compare("buchsbaum_sample.values", sample.values, replayed_sample.values)
        compare("buchsbaum_sample.linear_passed", sample.linear_passed, replayed_sample.linear_passed)
        compare(
            "buchsbaum_sample.quadratic_passed",
            sample.quadratic_passed,
            replayed_sample.quadratic_passed,
        )
        compare("buchsbaum_sample.all_standard", sample.all_standard, replayed_sample.all_standard)

    if certificate.reduction is None:
        logger.info(f"Replayed {report.checks_replayed} values, no reduction recorded")
        return report

    reduction = ReductionCertificate.from_record(ring, certificate.reduction)
    F.reduction = reduction
    compare(
        "reduction.r",
        reduction.r,
        reduction_number(F, reduction.ideal(ring), reduction.verified_up_to),
    )
    replayed_checks = check_intersection_condition(F, reduction, certificate.check_exponent)
    compare("checks.count", len(certificate.checks), len(replayed_checks))
    for recorded, replayed in zip(certificate.checks, replayed_checks):
        compare(f"checks[{recorded.name}, n={recorded.n}]", recorded.holds, replayed.holds)

    invariants = certificate.invariants
    trials = sample.trials if sample is not None else None
    replayed_invariants = InvariantSummary()
    if invariants.I_A is not None:
        replayed_invariants.I_A = ring_invariant(ring, trials, certificate.seed).value
        compare("invariants.I_A", invariants.I_A, replayed_invariants.I_A)
    if invariants.I_G is not None:
        graded = bsb_invariant_of_G(F, reduction)
        replayed_invariants.I_G = graded.value
        replayed_invariants.I_G_certified = graded.certified
        compare("invariants.I_G", invariants.I_G, graded.value)
        compare("invariants.I_G_certified", invariants.I_G_certified, graded.certified)
        compare("invariants.I_G_detected_at", invariants.I_G_detected_at, graded.detected_at)
    if invariants.h is not None:
        profile = local_cohomology_lengths(ring, trials, certificate.seed)
        compare("invariants.h", invariants.h.h, profile.h)
        compare("invariants.h.bsb_invariant", invariants.h.bsb_invariant, profile.bsb_invariant)

    if certificate.corso is not None:
        corso = corso_boundary_check(ring, F.generating_ideal, reduction)
        compare("corso.lhs", certificate.corso.lhs, corso.lhs)
        compare("corso.rhs", certificate.corso.rhs, corso.rhs)
        compare("corso.equal", certificate.corso.equal, corso.equal)

    if replayed_sample is not None and invariants.I_G is not None:
        profile_asked = replayed_sample.all_standard
        if invariants.h is not None or not profile_asked:
            verdict = derive_verdict(
                replayed_sample.all_standard,
                all(check.holds for check in replayed_checks),
                replayed_invariants,
            )
            compare("verdict", certificate.verdict, verdict.value)

    logger.info(f"Replayed {report.checks_replayed} values, {len(report.mismatches)} mismatches")
    return report
