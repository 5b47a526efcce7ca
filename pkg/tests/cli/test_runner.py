import pytest

from src.cli import (
    CommandReport,
    CommandStatus,
    SessionRunner,
    exit_code,
    format_table,
    parse_session,
    run_command,
)
from src.errors import CommandError

EMBEDDED = "ring A = F(32003)[x,y] / (x^2, x*y);\nfiltration M = adic(maxideal(A));\n"


def test_format_table():
    """Test that columns are left-aligned under a dashed rule."""
    lines = format_table(["n", "value"], [[0, 10], [12, 3]])
    assert lines == ["n   value", "--  -----", "0   10", "12  3"]


def test_exit_code():
    """Test that the worst status decides the exit code."""
    ok = CommandReport(command="a;")
    fails = CommandReport(command="b;", status=CommandStatus.EQUALITY_FAILS)
    inconclusive = CommandReport(command="c;", status=CommandStatus.INCONCLUSIVE)
    assert exit_code([]) == 0
    assert exit_code([ok]) == 0
    assert exit_code([ok, fails]) == 2
    assert exit_code([fails, inconclusive]) == 3


def test_hilbert_command(small_config):
    """Test the Hilbert-Samuel table and the fitted coefficients."""
    session = parse_session(EMBEDDED + "hilbert M 8;")
    report = run_command(session, session.commands[0], small_config)
    assert report.command == "hilbert M 8;"
    assert report.lines[0].split() == ["n", "length(A/I_n)"]
    assert report.lines[2].split() == ["0", "0"]
    assert report.lines[-2].split() == ["8", "9"]
    assert report.lines[-1] == "e = [1, -1]"
    assert report.status == CommandStatus.OK


def test_certify_command(small_config):
    """Test that certify prints a G_BUCHSBAUM verdict and keeps the certificate."""
    session = parse_session(EMBEDDED + "certify buchsbaum M;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.status == CommandStatus.OK
    assert report.certificate is not None
    assert any(line.split() == ["verdict", "G_BUCHSBAUM"] for line in report.lines)
    assert "> certify buchsbaum M;" in report.to_text()


def test_invariant_and_dseq_commands(small_config):
    """Test the invariant table and the sequence flags."""
    session = parse_session(EMBEDDED + "invariant A (y);\ndseq A (y);")
    invariant, dseq = SessionRunner(session, small_config).run()
    assert invariant.lines[2].split() == ["(y)", "2", "1", "1", "True"]
    assert dseq.lines[2].split() == ["True", "True", "True"]


def test_cohomology_command(small_config):
    """Test the local cohomology table of the embedded point."""
    session = parse_session(EMBEDDED + "cohomology A;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.lines[2].split() == ["h^0", "1"]
    assert report.lines[3].split() == ["invariant", "1"]


def test_intersect_command_vacuous(small_config):
    """Test that an empty check range is reported as a vacuous pass."""
    session = parse_session(EMBEDDED + "intersect M 1;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.lines == ["range empty: conditions hold vacuously"]


def test_corso_command(small_config):
    """Test that corso prints both sides of the inequality."""
    session = parse_session(EMBEDDED + "corso M;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.lines[2].split() == ["0", "-1", "True", "False"]
    assert report.certificate is None


def test_corso_escalation_prints_verdict_value(small_config):
    """Test that an attained boundary escalates and prints the bare verdict name."""
    session = parse_session("ring A = F(32003)[x,y];\nfiltration M = adic(maxideal(A));\ncorso M;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.lines[2].split() == ["0", "0", "True", "True"]
    assert report.certificate is not None
    assert report.lines[-1] == "escalated: verdict G_BUCHSBAUM"
    assert report.status == CommandStatus.OK


def test_command_error_continues(small_config):
    """Test that a failing command is reported at its location and the run goes on."""
    session = parse_session(EMBEDDED + "invariant A (x);\nhilbert M 4;")
    failed, hilbert = SessionRunner(session, small_config).run()
    assert failed.status == CommandStatus.ERROR
    assert failed.lines[0].startswith("error: 3:1: ")
    assert "not a system of parameters" in failed.lines[0]
    assert hilbert.status == CommandStatus.OK
    assert exit_code([failed, hilbert]) == 3


def test_corso_needs_adic_filtration(small_config):
    """Test that corso rejects a Ratliff-Rush filtration."""
    session = parse_session(EMBEDDED + "filtration R = rr(maxideal(A));\ncorso R;")
    report = SessionRunner(session, small_config).run()[0]
    assert report.status == CommandStatus.ERROR
    assert "adic filtration" in report.lines[0]


def test_declaration_error_stops_run(small_config):
    """Test that a rejected declaration raises at its location."""
    session = parse_session("ring B = F(7)[x,y] / (x^2 + y);\ncohomology B;")
    with pytest.raises(CommandError) as info:
        SessionRunner(session, small_config).run()
    assert info.value.line == 1


def test_run_command_requires_member(small_config):
    """Test that a command from another session is refused."""
    session = parse_session(EMBEDDED + "hilbert M 4;")
    other = parse_session(EMBEDDED + "hilbert M 5;")
    with pytest.raises(CommandError, match="not part of the session"):
        run_command(session, other.commands[0], small_config)
