from typing import Any

from loguru import logger

from ..config import PipelineConfig, settings
from ..errors import AlgebraError
from ..filtrations import Filtration, ReductionCertificate, find_reduction, validate_goodness
from ..invariants import bsb_invariant_of_G, local_cohomology_lengths, ring_invariant
from ..models.certificate import Certificate, InvariantSummary, Verdict
from ..models.reports import CorsoResult
from ..rings import IdealHandle
from .checks import check_intersection_condition, sanity_sample
from .corso import corso_boundary_check


def derive_verdict(sane: bool, conditions_hold: bool, invariants: InvariantSummary) -> Verdict:
    """Verdict of a completed run from the sample, the conditions and the invariants."""
    equal = invariants.I_G == invariants.I_A
    if not sane:
        if equal and invariants.I_G_certified:
            return Verdict.INCONCLUSIVE
        return Verdict.INPUT_SANITY_FAIL
    if not invariants.I_G_certified:
        return Verdict.INCONCLUSIVE
    if conditions_hold and equal:
        return Verdict.G_BUCHSBAUM
    return Verdict.EQUALITY_FAILS


class BuchsbaumCertifier:
    """
    Runs the certification pipeline for the associated graded ring of a filtration.

    Pipeline:
    1. Sanity sample - standardness of random sops from m and m²
    2. Goodness and reduction - filtration axioms checked, then a verified randomized search
    3. Intersection conditions - (a^2) ∩ I_n = (a^2)·I_{n-2} on the finite range
    4. Invariants - the invariant of A at a standard sop and of G by detection
    5. Verdict - assembled from the three independent parts
    """

    def __init__(self, config: PipelineConfig | None = None):
        """
        Initialize the certifier.

        Args:
            config: Per-run knobs. Defaults come from settings.
        """
        self.config = config or PipelineConfig()

    def get_runtime_info(self) -> str:
        return (
            f"seed {self.config.seed}, {self.config.trials} sanity trials, "
            f"{self.config.reduction_trials} reduction trials"
        )

    def certify(self, F: Filtration) -> Certificate:
        """
        Run the complete pipeline on a filtration.

        Args:
            F: An I-good filtration of a quotient ring.

        Returns:
            The assembled certificate. Algebra failures downgrade the
            verdict to INCONCLUSIVE with the message as reason.
        """
        R = F.ring
        logger.info(f"\n🔬 Certifying G({F}) over {R}")
        logger.info(f"Using: {self.get_runtime_info()}")
        logger.info("=" * 50)

        certificate = Certificate(
            ring=R.describe(),
            filtration=F.describe(),
            d=R.dim,
            beta=F.beta,
            check_exponent=self.config.check_exponent,
            seed=self.config.seed,
        )

        logger.info("\n📋 Step 1: Sampling systems of parameters...")
        try:
            sample = sanity_sample(R, self.config.trials, self.config.seed)
        except AlgebraError as error:
            return self._inconclusive(certificate, f"sanity sample: {error}")
        certificate.buchsbaum_sample = sample
        logger.info(f"✅ Sample of {sample.trials}: invariants {sorted(set(sample.values))}")

        if not sample.all_standard and not sample.quadratic_passed:
            logger.warning("⚠️  Input fails the Buchsbaum sanity sample")
            certificate.verdict = Verdict.INPUT_SANITY_FAIL
            certificate.reasons.append("sampled sops are not all standard with equal invariants")
            return certificate

        try:
            logger.info("\n🔍 Step 2: Validating the filtration and searching for a reduction...")
            bound = R.dim + (1 if F.claimed_r is None else F.claimed_r) + 2
            goodness = validate_goodness(F, bound)
            if not goodness.passed:
                assert goodness.first_failure is not None
                failure = goodness.first_failure
                return self._inconclusive(
                    certificate,
                    f"filtration is not good at n={failure.n} ({failure.check} check, bound {bound})",
                )
            reduction = F.reduction or find_reduction(
                F,
                self.config.reduction_trials,
                self.config.n_max,
                self.config.seed,
            )
            certificate.reduction = reduction.to_record()
            certificate.r = reduction.r
            logger.info(f"✅ Reduction ({', '.join(map(str, reduction.generators))}), r = {reduction.r}")

            logger.info("\n📐 Step 3: Checking intersection conditions...")
            certificate.checks = check_intersection_condition(
                F, reduction, self.config.check_exponent
            )
            logger.info(
                f"✅ {sum(c.holds for c in certificate.checks)}/{len(certificate.checks)} conditions hold"
            )

            logger.info("\n🧮 Step 4: Computing invariants...")
            self._fill_invariants(certificate, F, reduction, with_profile=sample.all_standard)
        except AlgebraError as error:
            if not sample.all_standard:
                certificate.verdict = Verdict.INPUT_SANITY_FAIL
                certificate.reasons.append(f"sanity sample failed and {error}")
                return certificate
            return self._inconclusive(certificate, str(error))

        logger.info("\n📝 Step 5: Assembling verdict...")
        self._assemble_verdict(certificate, sample.all_standard)
        logger.info(f"✅ Verdict: {Verdict(certificate.verdict).value}")
        logger.info("\n" + "=" * 50)
        return certificate

    def _fill_invariants(
        self,
        certificate: Certificate,
        F: Filtration,
        reduction: ReductionCertificate,
        with_profile: bool,
    ) -> None:
        R = F.ring
        I_A = ring_invariant(R, self.config.trials, self.config.seed).value
        graded = bsb_invariant_of_G(F, reduction)
        certificate.invariants = InvariantSummary(
            I_A=I_A,
            I_G=graded.value,
            I_G_certified=graded.certified,
            I_G_detected_at=graded.detected_at,
        )
        if graded.value < I_A:
            logger.warning(f"⚠️  Invariant of G ({graded.value}) below that of A ({I_A})")
        if with_profile:
            certificate.invariants.h = local_cohomology_lengths(
                R, self.config.trials, self.config.seed
            )
        logger.info(f"✅ I(A) = {I_A}, I(G) = {graded.value}")

    def _assemble_verdict(self, certificate: Certificate, sane: bool) -> None:
        invariants = certificate.invariants
        verdict = derive_verdict(sane, certificate.conditions_hold, invariants)
        certificate.verdict = verdict
        if not sane:
            if verdict == Verdict.INCONCLUSIVE:
                certificate.notes.append(
                    "G quasi-Buchsbaum: sops from m² are standard and I(G) = I(A); "
                    "full Buchsbaumness of A not confirmed"
                )
            else:
                certificate.reasons.append("sops from m are not all standard")
            return
        if not invariants.I_G_certified:
            certificate.reasons.append("invariant of G not certified; lower bound only")
            return
        if certificate.conditions_hold != (invariants.I_G == invariants.I_A):
            logger.warning("⚠️  Intersection conditions and invariant equality disagree")
            certificate.notes.append("intersection conditions and invariant equality disagree")
        if verdict == Verdict.G_BUCHSBAUM:
            invariants.h_applies_to_G = invariants.h is not None
            certificate.notes.append(
                "local cohomology lengths of G equal those of A"
            )

    def _inconclusive(self, certificate: Certificate, reason: str) -> Certificate:
        logger.warning(f"⚠️  Inconclusive: {reason}")
        certificate.verdict = Verdict.INCONCLUSIVE
        certificate.reasons.append(reason)
        return certificate

    def corso(self, I: IdealHandle) -> dict[str, Any]:
        """
        Corso boundary check for the I-adic filtration, escalating to
        certification when the boundary is attained on a sane input.

        Returns:
            Dictionary containing:
                - corso: The CorsoResult
                - certificate: Certificate of the escalation, if any
                - sample_passed: Whether the sanity sample passed
        """
        F = Filtration.adic(I)
        logger.info("\n📏 Corso boundary check")
        reduction = find_reduction(
            F, self.config.reduction_trials, self.config.n_max, self.config.seed
        )
        result: CorsoResult = corso_boundary_check(
            I.ring, I, reduction, self.config.horizon
        )
        outcome: dict[str, Any] = {"corso": result, "certificate": None, "sample_passed": None}
        if not result.equal:
            return outcome
        sample = sanity_sample(I.ring, self.config.trials, self.config.seed)
        outcome["sample_passed"] = sample.all_standard
        if sample.all_standard:
            logger.info("✅ Boundary attained on a Buchsbaum input; escalating")
            certificate = self.certify(F)
            result.escalated = True
            result.implication = (
                "A Buchsbaum and boundary equality give I(G(I)) = I(A); "
                f"pipeline verdict {Verdict(certificate.verdict).value}"
            )
            certificate.corso = result
            outcome["certificate"] = certificate
        return outcome


def certify_buchsbaum_G(F: Filtration, config: PipelineConfig | None = None) -> Certificate:
    return BuchsbaumCertifier(config).certify(F)


def create_certifier(config: PipelineConfig | None = None) -> BuchsbaumCertifier:
    """
    Factory function to create a certifier instance.

    Args:
        config: Per-run knobs. Defaults come from settings.

    Returns:
        Configured BuchsbaumCertifier instance
    """
    logger.debug(f"Creating certifier over {settings.get_runtime_info()}")
    return BuchsbaumCertifier(config=config)
