"""
Executes parsed sessions: builds the declared objects in source order and
dispatches each command to the library.
"""

from enum import Enum
from typing import Sequence

from loguru import logger
from pydantic import BaseModel, Field

from ..algebra.field import PrimeField
from ..algebra.polynomial import PolyRing, Polynomial
from ..certifier import BuchsbaumCertifier, check_intersection_condition, create_certifier
from ..config import PipelineConfig
from ..errors import AlgebraError, CommandError
from ..filtrations import Filtration, find_reduction
from ..invariants import (
    invariant_of_sop,
    is_d_sequence,
    is_standard_sop,
    is_usd_sequence,
    is_weak_sequence,
    local_cohomology_lengths,
)
from ..models.certificate import Certificate, Verdict
from ..models.descriptions import FiltrationKind
from ..models.reports import SequenceReport
from ..numerics import hilbert_coefficients, hs_function
from ..rings import IdealHandle, QuotientRing
from .session import (
    Command,
    CommandKind,
    FiltrationDecl,
    FiltrationSyntax,
    IdealDecl,
    IdealExpr,
    IdealExprKind,
    Node,
    RingDecl,
    Session,
)


class CommandStatus(str, Enum):
    OK = "ok"
    EQUALITY_FAILS = "equality_fails"
    INCONCLUSIVE = "inconclusive"
    ERROR = "error"


EXIT_CODES = {
    CommandStatus.OK: 0,
    CommandStatus.EQUALITY_FAILS: 2,
    CommandStatus.INCONCLUSIVE: 3,
    CommandStatus.ERROR: 3,
}


class CommandReport(BaseModel):
    command: str
    lines: list[str] = Field(default_factory=list)
    status: CommandStatus = CommandStatus.OK
    certificate: Certificate | None = None

    def to_text(self) -> str:
        return "\n".join([f"> {self.command}", *self.lines]) + "\n"


def format_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> list[str]:
    """Left-aligned plain-text table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def _status_of(verdict: str) -> CommandStatus:
    if verdict == Verdict.G_BUCHSBAUM.value:
        return CommandStatus.OK
    if verdict == Verdict.EQUALITY_FAILS.value:
        return CommandStatus.EQUALITY_FAILS
    return CommandStatus.INCONCLUSIVE


def _certificate_lines(certificate: Certificate) -> list[str]:
    invariants = certificate.invariants
    sample = certificate.buchsbaum_sample
    rows: list[tuple[str, object]] = [
        ("ring", certificate.ring.to_text()),
        ("d", certificate.d),
        ("r", certificate.r if certificate.r is not None else "-"),
        ("beta", certificate.beta if certificate.beta is not None else "-"),
    ]
    if certificate.reduction is not None:
        rows.append(("reduction", "(" + ", ".join(certificate.reduction.generators) + ")"))
    if sample is not None:
        rows.append(("sanity sample", f"{sample.trials} sops, passed={sample.all_standard}"))
    held = sum(check.holds for check in certificate.checks)
    rows.append(("intersection checks", f"{held}/{len(certificate.checks)} hold"))
    rows.append(("I(A)", invariants.I_A if invariants.I_A is not None else "-"))
    if invariants.I_G is not None:
        suffix = "" if invariants.I_G_certified else " (lower bound)"
        rows.append(("I(G)", f"{invariants.I_G}{suffix}"))
    if invariants.h is not None:
        rows.append(("h", invariants.h.h))
    rows.append(("verdict", certificate.verdict))
    lines = format_table(["field", "value"], rows)
    lines += [f"reason: {reason}" for reason in certificate.reasons]
    lines += [f"note: {note}" for note in certificate.notes]
    return lines


class SessionRunner:
    """
    Runs the statements of a session in order.

    Args:
        session: A parsed session.
        config: Pipeline knobs shared by every command.
    """

    def __init__(self, session: Session, config: PipelineConfig | None = None):
        self.session = session
        self.config = config or PipelineConfig()
        self.certifier: BuchsbaumCertifier = create_certifier(self.config)
        self.rings: dict[str, QuotientRing] = {}
        self.ideals: dict[str, IdealHandle] = {}
        self.filtrations: dict[str, Filtration] = {}

    def run(self) -> list[CommandReport]:
        """
        Execute every statement.

        A failing declaration stops the run; a failing command is reported
        and the run continues.
        """
        reports = []
        for statement in self.session.statements:
            if isinstance(statement, Command):
                try:
                    reports.append(self.run_command(statement))
                except CommandError as error:
                    logger.error(f"❌ {error}")
                    reports.append(
                        CommandReport(
                            command=statement.to_text(),
                            lines=[f"error: {error}"],
                            status=CommandStatus.ERROR,
                        )
                    )
            else:
                self.declare(statement)
        return reports

    def _fail(self, node: Node, error: Exception) -> CommandError:
        return CommandError(str(error), node.line, node.column)

    def declare(self, statement: RingDecl | IdealDecl | FiltrationDecl) -> None:
        """
        Build the object named by a declaration.

        Raises:
            CommandError: If the library rejects the declaration.
        """
        try:
            if isinstance(statement, RingDecl):
                ambient = PolyRing(PrimeField(statement.prime), tuple(statement.variables))
                self.rings[statement.name] = QuotientRing(
                    ambient,
                    [ambient.parse(text) for text in statement.relations],
                    statement.name,
                )
            elif isinstance(statement, IdealDecl):
                self.ideals[statement.name] = self.resolve(statement.expr)
            else:
                self.filtrations[statement.name] = self._filtration(statement)
        except AlgebraError as error:
            raise self._fail(statement, error) from error
        logger.debug(f"Declared {statement.name}")

    def resolve(self, expr: IdealExpr) -> IdealHandle:
        ring = self.rings[expr.ring]
        if expr.kind == IdealExprKind.NAME:
            return self.ideals[str(expr.ref)]
        if expr.kind == IdealExprKind.MAXIDEAL:
            return ring.maximal_ideal
        return ring.ideal(expr.gens)

    def _filtration(self, decl: FiltrationDecl) -> Filtration:
        handles = [self.resolve(expr) for expr in decl.ideals]
        if decl.syntax == FiltrationSyntax.ADIC:
            return Filtration.adic(handles[0])
        if decl.syntax == FiltrationSyntax.RR:
            return Filtration.ratliff_rush(handles[0])
        assert decl.reduction is not None and decl.r is not None
        return Filtration.table(handles, self.resolve(decl.reduction), decl.r)

    def _polys(self, ring: QuotientRing, texts: Sequence[str]) -> list[Polynomial]:
        return [ring.ambient.parse(text) for text in texts]

    def run_command(self, command: Command) -> CommandReport:
        """
        Dispatch one command.

        Raises:
            CommandError: Wrapping any library failure, at the command's location.
        """
        logger.info(f"Running {command.to_text()} at {command.location}")
        try:
            report = self._dispatch(command)
        except AlgebraError as error:
            raise self._fail(command, error) from error
        report.command = command.to_text()
        return report

    def _dispatch(self, command: Command) -> CommandReport:
        match command.kind:
            case CommandKind.CERTIFY:
                return self._certify(self.filtrations[command.target])
            case CommandKind.HILBERT:
                return self._hilbert(self.filtrations[command.target], int(command.number or 0))
            case CommandKind.INVARIANT:
                assert command.ideal is not None
                return self._invariant(self.rings[command.target], self.resolve(command.ideal))
            case CommandKind.DSEQ:
                ring = self.rings[command.target]
                return self._dseq(ring, self._polys(ring, command.polys))
            case CommandKind.CORSO:
                return self._corso(self.filtrations[command.target])
            case CommandKind.COHOMOLOGY:
                return self._cohomology(self.rings[command.target])
            case CommandKind.INTERSECT:
                return self._intersect(self.filtrations[command.target], int(command.number or 1))
        raise AssertionError(f"unhandled command {command.kind}")

    def _certify(self, F: Filtration) -> CommandReport:
        certificate = self.certifier.certify(F)
        return CommandReport(
            command="",
            lines=_certificate_lines(certificate),
            status=_status_of(certificate.verdict),
            certificate=certificate,
        )

    def _hilbert(self, F: Filtration, N: int) -> CommandReport:
        H = hs_function(F, N)
        lines = format_table(["n", "length(A/I_n)"], list(enumerate(H.values)))
        try:
            coefficients = hilbert_coefficients(H, F.ring.dim)
            lines.append("e = [" + ", ".join(map(str, coefficients.e)) + "]")
        except AlgebraError as error:
            lines.append(f"e: not fitted ({error})")
        return CommandReport(command="", lines=lines)

    def _invariant(self, R: QuotientRing, Q: IdealHandle) -> CommandReport:
        report = invariant_of_sop(R, Q.gens)
        standard = is_standard_sop(R, Q.gens)
        lines = format_table(
            ["sop", "length", "multiplicity", "invariant", "standard"],
            [["(" + ", ".join(report.sop) + ")", report.length, report.multiplicity, report.value, standard]],
        )
        return CommandReport(command="", lines=lines)

    def _dseq(self, R: QuotientRing, seq: list[Polynomial]) -> CommandReport:
        report = SequenceReport(
            sequence=[str(a) for a in seq],
            d_sequence=is_d_sequence(R, seq),
            weak_sequence=is_weak_sequence(R, seq),
            usd_sequence=is_usd_sequence(R, seq, self.config.usd_bound),
            usd_bound=self.config.usd_bound,
        )
        lines = format_table(
            ["d-sequence", "weak sequence", f"u.s.d. (n <= {report.usd_bound})"],
            [[report.d_sequence, report.weak_sequence, report.usd_sequence]],
        )
        return CommandReport(command="", lines=lines)

    def _corso(self, F: Filtration) -> CommandReport:
        if F.kind != FiltrationKind.ADIC:
            raise AlgebraError(f"corso needs an adic filtration, got {F.kind.value}")
        outcome = self.certifier.corso(F.generating_ideal)
        result = outcome["corso"]
        lines = format_table(
            ["lhs", "rhs", "holds >=", "equal"],
            [[result.lhs, result.rhs, result.holds_geq, result.equal]],
        )
        certificate: Certificate | None = outcome["certificate"]
        status = CommandStatus.OK
        if certificate is not None:
            lines.append(f"escalated: verdict {certificate.verdict}")
            status = _status_of(certificate.verdict)
        return CommandReport(command="", lines=lines, status=status, certificate=certificate)

    def _cohomology(self, R: QuotientRing) -> CommandReport:
        profile = local_cohomology_lengths(R, self.config.trials, self.config.seed)
        rows = [[f"h^{i}", value] for i, value in enumerate(profile.h)]
        rows.append(["invariant", profile.bsb_invariant])
        return CommandReport(command="", lines=format_table(["", "length"], rows))

    def _intersect(self, F: Filtration, m: int) -> CommandReport:
        reduction = F.reduction or find_reduction(
            F, self.config.reduction_trials, self.config.n_max, self.config.seed
        )
        checks = check_intersection_condition(F, reduction, m)
        if not checks:
            return CommandReport(command="", lines=["range empty: conditions hold vacuously"])
        lines = format_table(["n", "holds"], [[check.n, check.holds] for check in checks])
        return CommandReport(command="", lines=lines)


def run_command(
    session: Session, command: Command, config: PipelineConfig | None = None
) -> CommandReport:
    """
    Run one command of a session after building the declarations before it.

    Raises:
        CommandError: If a declaration or the command fails.
    """
    runner = SessionRunner(session, config)
    for statement in session.statements:
        if statement is command:
            return runner.run_command(command)
        if not isinstance(statement, Command):
            runner.declare(statement)
    raise CommandError("command is not part of the session", command.line, command.column)


def exit_code(reports: Sequence[CommandReport]) -> int:
    """0 when everything is informational or G_BUCHSBAUM, else the worst status."""
    return max((EXIT_CODES[report.status] for report in reports), default=0)
