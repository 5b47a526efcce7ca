"""
Command-line entry point.

Exit codes: 0 when every verdict is G_BUCHSBAUM or the output is
informational, 2 when EQUALITY_FAILS occurs, 3 for sanity failures,
inconclusive verdicts and runtime errors, 4 for usage and parse errors.
"""

import argparse
import sys
from pathlib import Path
from typing import NoReturn, Sequence

from loguru import logger

from ..catalog import save_certificate, save_certificates
from ..config import PipelineConfig, configure_logging
from ..errors import CommandError, SessionError
from .parser import parse_session
from .runner import SessionRunner, exit_code
from .session import SessionOptions

USAGE_ERROR = 4
RUNTIME_ERROR = 3


class SessionArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = SessionArgumentParser(
        prog="buchsbaum-lab",
        description="Buchsbaum invariants and certification of associated graded rings.",
    )
    ap.add_argument("session", help="Session file, or - for standard input")
    ap.add_argument("--prime", type=int, default=None, help="Override the characteristic of every ring")
    ap.add_argument("--seed", type=int, default=None, help="Seed for every randomized choice")
    ap.add_argument("--trials", type=int, default=None, help="Sanity-sample trials (default 12)")
    ap.add_argument("--horizon", type=int, default=None, help="Horizon for Hilbert-Samuel fits")
    ap.add_argument("--usd-bound", type=int, default=None, help="Exponent bound for u.s.d.-sequence checks")
    ap.add_argument("--json", type=Path, default=None, metavar="PATH", help="Write certificates as JSON")
    ap.add_argument("--log-level", default=None, help="Log level (default WARNING)")
    return ap


def _read_source(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    path = Path(name)
    if not path.exists():
        raise FileNotFoundError(f"Session file not found: {name}")
    return path.read_text(encoding="utf-8")


def _pipeline_config(options: SessionOptions) -> PipelineConfig:
    knobs = {
        "trials": options.trials,
        "seed": options.seed,
        "horizon": options.horizon,
        "usd_bound": options.usd_bound,
    }
    return PipelineConfig(**{key: value for key, value in knobs.items() if value is not None})


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        options = SessionOptions(
            prime=args.prime,
            trials=args.trials,
            horizon=args.horizon,
            seed=args.seed,
            usd_bound=args.usd_bound,
        )
        session = parse_session(_read_source(args.session), options)
    except (SessionError, FileNotFoundError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return USAGE_ERROR

    runner = SessionRunner(session, _pipeline_config(options))
    try:
        reports = runner.run()
    except CommandError as error:
        logger.error(f"❌ {error}")
        print(f"error: {error}", file=sys.stderr)
        return RUNTIME_ERROR

    for report in reports:
        print(report.to_text())

    certificates = [report.certificate for report in reports if report.certificate is not None]
    if args.json is not None:
        if len(certificates) == 1:
            save_certificate(certificates[0], args.json)
        elif certificates:
            save_certificates(certificates, args.json)
        else:
            logger.warning("⚠️  --json given but no command produced a certificate")

    return exit_code(reports)
