"""
MHSKit Main Module

This module provides the command line entry point. Reports are printed to
standard output as JSON; logs go to standard error. Exit status 0 means the
computation ran (whatever its verdict), 1 an input error and 2 an internal
invariant violation.
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from mhskit.cli.commands import CommandOptions, default_manager
from mhskit.data.report_converter import ReportConverter
from mhskit.errors import InputError, InvariantViolation, MhsKitError
from mhskit.linalg.scalars import parse_scalar
from mhskit.settings import get_options

logger = logging.getLogger("mhskit")

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Usage errors become input errors instead of argparse's own exit status."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _strip(text: str) -> Tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"--strip takes a,b,c, got {text!r}", "--strip")
    values = [parse_scalar(p) for p in parts]
    if not all(v.is_real() for v in values):
        raise InputError(f"--strip takes rationals, got {text!r}", "--strip")
    return tuple(v.re for v in values)


def _grid(text: str) -> Tuple[int, int]:
    try:
        nx, ny = (int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"--grid takes nx,ny, got {text!r}", "--grid")
    return nx, ny


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--retraction", choices=("delta", "sl2"), default="delta",
                        help="Retraction to the real-split locus")
    common.add_argument("--d", help="Norm bound for Hodge classes (rational)")
    common.add_argument("--strip", help="Vertical strip a,b,c: a < Re z < b, Im z > c")
    common.add_argument("--grid", default="20,20", help="Probe grid nx,ny")
    common.add_argument("--thorough", action="store_true", help="Run the exhaustive validation checks")
    common.add_argument("--workers", type=int, help="Worker threads for the strip probe")
    common.add_argument("--verbose", "-v", action="count", default=0, help="Log more (repeatable)")

    parser = _Parser(prog="mhskit", description="MHSKit - exact computations with mixed Hodge structures")
    verbs = parser.add_subparsers(dest="verb", metavar="verb", required=True)
    usage = {
        'validate': ("mhs.json", "Check the mixed Hodge axioms"),
        'bigrade': ("mhs.json", "Deligne bigrading"),
        'delta': ("mhs.json", "The delta splitting"),
        'retract': ("mhs.json", "Retraction to the real-split locus"),
        'relwt': ("model1d.json", "Relative weight filtration M(N, W)"),
        'limit': ("model1d.json", "Limit mixed Hodge structure (Psi(0), M)"),
        'admissible': ("model1d.json", "Pre-admissibility conditions"),
        'probe': ("model1d.json", "Boundedness probe on a vertical strip"),
        'reduce': ("reduction.json", "Reduction to a fundamental domain"),
        'identify': ("descriptor.json", "Quotient identification of two points"),
        'compare-structures': ("descriptor.json", "Definable-structure comparison of two fundamental sets"),
        'verify-set': ("descriptor.json", "Fundamental set verification"),
        'hodge': ("mhs.json", "Integral Hodge classes of bounded norm"),
        'membership': ("domain.json", "Period domain membership"),
        'schema-check': ("document.json", "Schema validation only"),
    }
    for verb, (metavar, text) in usage.items():
        sub = verbs.add_parser(verb, parents=[common], help=text, description=text)
        nargs = 2 if verb == "compare-structures" else 1
        sub.add_argument("paths", nargs=nargs, metavar=metavar)
        if verb == "identify":
            sub.add_argument("points", nargs=2, metavar="point", help="Points as 'tau', 'x1,x2' or 'tau|x1,x2'")
    return parser


def configure_logging(verbose: int) -> None:
    level = get_options()['log_level']
    if verbose:
        level = "INFO" if verbose == 1 else "DEBUG"
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, dispatch and print one verb. Returns the exit status."""
    converter = ReportConverter(get_options()['significant_digits'])
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        options = CommandOptions(
            retraction=args.retraction,
            d=args.d,
            strip=_strip(args.strip) if args.strip else None,
            grid=_grid(args.grid),
            thorough=args.thorough,
            workers=args.workers,
            extra={'points': getattr(args, "points", None)},
        )
        manager = default_manager()
        report = manager.execute_command(manager.create(args.verb, args.paths, options))
    except InvariantViolation as e:
        logger.error("internal invariant violated: %s", e)
        print(converter.to_json({'error': str(e), 'kind': 'invariant'}))
        return EXIT_INVARIANT
    except (MhsKitError, ValueError) as e:
        logger.error("%s", e)
        print(converter.to_json({'error': str(e), 'kind': 'input', 'path': getattr(e, 'path', None)}))
        return EXIT_INPUT
    except Exception as e:
        logger.exception("unexpected failure")
        print(converter.to_json({'error': f"{type(e).__name__}: {e}", 'kind': 'internal'}))
        return EXIT_INVARIANT
    print(converter.to_json(report))
    if args.verb == "schema-check" and not report.get('ok'):
        return EXIT_INPUT
    return EXIT_OK


def main():
    """Main entry point for the mhskit command."""
    sys.exit(run())


if __name__ == "__main__":
    main()
