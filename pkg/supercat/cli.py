"""
Super Catalan Verifier - Command Line Interface

    supercat compute supercatalan M N | catalan N | centralbinom N
    supercat verify  [--primes MIN..MAX] [--suites LIST] [--n-max K]
                     [--format json|csv|text] [--out PATH] [--jobs N] [--self-test]
    supercat report  (same flags, JSON by default)
    supercat serve   [--host HOST] [--port PORT]

Flags left out fall back to SUPERCAT_* environment variables, then defaults.
"""
import argparse
import logging
import sys
from typing import List, Optional

from supercat.config import get_settings
from supercat.exceptions import SupercatError
from supercat.models.scan import (
    OutputFormat,
    ScanConfig,
    parse_prime_range,
    parse_suites,
)
from supercat.services.exact_core import compute_value
from supercat.services.reporting import emit
from supercat.suites.orchestrator import run_scan

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _add_scan_flags(parser: argparse.ArgumentParser, default_format: OutputFormat) -> None:
    parser.add_argument("--primes", metavar="MIN..MAX", help="inclusive prime range")
    parser.add_argument("--suites", metavar="LIST", help="comma separated suites, or 'all'")
    parser.add_argument("--n-max", type=_nonnegative, metavar="K", help="identity window [0, K]")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], help="output format")
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    parser.add_argument("--jobs", type=_positive, metavar="N", help="worker processes")
    parser.add_argument("--self-test", action="store_true", default=None,
                        help="inject a known-false congruence to exercise the failure path")
    parser.set_defaults(default_format=default_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercat",
        description="Compute super Catalan numbers and verify congruences on their double sums.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="print an exact value")
    kinds = compute.add_subparsers(dest="kind", required=True)
    supercatalan = kinds.add_parser("supercatalan", help="S(m, n)")
    supercatalan.add_argument("m", type=_nonnegative)
    supercatalan.add_argument("n", type=_nonnegative)
    kinds.add_parser("catalan", help="C_n").add_argument("n", type=_nonnegative)
    kinds.add_parser("centralbinom", help="binom(2n, n)").add_argument("n", type=_nonnegative)

    _add_scan_flags(commands.add_parser("verify", help="run a scan, text summary"), OutputFormat.TEXT)
    _add_scan_flags(commands.add_parser("report", help="run a scan, machine-readable report"), OutputFormat.JSON)

    serve = commands.add_parser("serve", help="start the HTTP API")
    serve.add_argument("--host", default="0.0.0.0")
    serve.add_argument("--port", type=_positive, default=8000)
    return parser


def scan_config_from_args(args: argparse.Namespace) -> ScanConfig:
    """Flags override SUPERCAT_* settings, which override defaults."""
    settings = get_settings()
    overrides = {
        "identity_n_max": args.n_max,
        "output_path": args.out,
        "parallelism": args.jobs,
        "self_test": args.self_test,
    }
    if args.primes:
        overrides["prime_min"], overrides["prime_max"] = parse_prime_range(args.primes)
    if args.suites is not None:
        overrides["suites"] = parse_suites(args.suites)
    overrides["output_format"] = args.format or settings.FORMAT or args.default_format
    return ScanConfig.from_settings(settings, **overrides)


def compute_command(args: argparse.Namespace) -> int:
    """Print the exact value asked for by `compute`."""
    value = compute_value(args.kind, args.n, getattr(args, "m", None))
    print(value)
    return EXIT_OK


def _run_scan(args: argparse.Namespace) -> int:
    config = scan_config_from_args(args)
    report = run_scan(config)
    emit(report, config.output_format, config.output_path)
    if report.failures:
        logger.warning(f"❌ {len(report.failures)} failing record(s)")
    return report.exit_code


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn
    uvicorn.run("supercat.main:app", host=args.host, port=args.port)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    handlers = {"compute": compute_command, "verify": _run_scan, "report": _run_scan, "serve": _run_serve}
    try:
        return handlers[args.command](args)
    except SupercatError as e:
        logger.error(f"{e}")
        print(f"supercat: error: {e}", file=sys.stderr)
        return EXIT_USAGE if isinstance(e, ValueError) else EXIT_FAILURES


if __name__ == "__main__":
    sys.exit(main())
