"""Command-line front end: ``uzspectra <task> [options]``.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 numerical failure at a grid point.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, Final, Optional, Sequence, TextIO

from .errors import ConfigError, ConvergenceError, GridPointError
from .sweep import (
    TASKS,
    RunOutcome,
    SweepConfig,
    apply_overrides,
    build_config,
    load_document,
    run,
    set_leaf,
)
from .version import __version__

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK: Final[int] = 0
EXIT_VERIFY_FAILED: Final[int] = 1
EXIT_CONFIG: Final[int] = 2
EXIT_NUMERICAL: Final[int] = 3

LOG_FORMAT: Final[str] = "%(asctime)s %(levelname)s %(name)s: %(message)s"

TASK_HELP: Final[Dict[str, str]] = {
    "repgen": "write generator matrices, Casimir and residuals as JSON",
    "verify": "run the algebra, Hopf, adjoint and PT identity suites",
    "family-sweep": "eigenvalues of the three-parameter family on a grid",
    "ep-scan": "PT phase map and exceptional points along one grid",
    "poly-sweep": "eigenvalues of mu- J- + p(J0) (sin/cos bands) on a grid",
    "qdot-sweep": "exact vs approximate double-dot levels over detuning",
}


def build_parser() -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="uzspectra",
        description=("Spectra, exceptional points and Hopf checks for "
                     "PT-symmetric U_z(sl(2,R)) Hamiltonians."))
    parser.add_argument("--version",
                        action="version",
                        version=f"%(prog)s {__version__}")
    tasks = parser.add_subparsers(dest="task", metavar="task", required=True)
    for name in TASKS:
        sub: argparse.ArgumentParser = tasks.add_parser(name,
                                                        help=TASK_HELP[name])
        sub.add_argument("--config", help="JSON config document")
        sub.add_argument("--set",
                         dest="overrides",
                         action="append",
                         default=[],
                         metavar="KEY=VALUE",
                         help="override a config leaf by dotted path")
        sub.add_argument("--out", help="output file (output.path)")
        sub.add_argument("--format",
                         choices=("csv", "json"),
                         help="output format (output.format)")
        sub.add_argument("--workers",
                         type=int,
                         help="concurrent grid-point workers")
        sub.add_argument("--seed",
                         type=int,
                         help="recorded in the output metadata")
        sub.add_argument("--log-level",
                         default="WARNING",
                         choices=("DEBUG", "INFO", "WARNING", "ERROR"),
                         help="logging level on stderr (default WARNING)")
    return parser


def _flag_leaves(args: argparse.Namespace) -> Dict[str, Any]:
    """Leaves set by the dedicated flags, applied after ``--set``."""
    leaves: Dict[str, Any] = {"task": args.task}
    if args.out is not None:
        leaves["output.path"] = args.out
    if args.format is not None:
        leaves["output.format"] = args.format
    if args.workers is not None:
        leaves["workers"] = args.workers
    if args.seed is not None:
        leaves["seed"] = args.seed
    return leaves


def _config_for(args: argparse.Namespace) -> SweepConfig:
    doc: Dict[str, Any] = load_document(args.config)
    declared: Any = doc.get("task", args.task)
    if declared != args.task:
        raise ConfigError(
            f"config declares task {declared!r}, command is {args.task!r}",
            path="task")
    doc = apply_overrides(doc, args.overrides)
    for dotted, value in _flag_leaves(args).items():
        set_leaf(doc, dotted, value)
    return build_config(doc)


def _report(outcome: RunOutcome, out: TextIO) -> int:
    for report in outcome.reports:
        if outcome.task == "verify" or not report.passed:
            print(report.render(), file=out)
    print(outcome.summary(), file=out)
    if outcome.task == "verify" and not outcome.passed:
        for report in outcome.reports:
            for failed in report.failures:
                logger.error("%s: %s failed (residual %.3e > %.1e)",
                             report.title, failed.name, failed.residual,
                             failed.bound)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None,
         out: Optional[TextIO] = None) -> int:
    """Run the CLI and return its exit code.

    Args:
        argv: Arguments without the program name (``sys.argv[1:]`` if
            omitted).
        out: Stream for the summary and reports (stdout if omitted).
    """
    stream: TextIO = out if out is not None else sys.stdout
    args: argparse.Namespace = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format=LOG_FORMAT,
                        stream=sys.stderr)
    try:
        config: SweepConfig = _config_for(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        outcome: RunOutcome = run(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (GridPointError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return _report(outcome, stream)


if __name__ == "__main__":
    raise SystemExit(main())
