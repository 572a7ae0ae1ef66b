"""
Command line for the triangle enclosure engine

    python -m src.enclose report --angles 75 60 --side c=2
    python -m src.enclose sweep --min 95 --max 105 --step 0.01 --legs 2
    python -m src.enclose calabi --digits 7
    python -m src.enclose atlas --nx 120 --ny 100 --csv atlas.csv --svg atlas.svg
    python -m src.enclose figure --which polya --angles 60 60 --svg polya.svg

Results go to stdout unless a file is named; status lines go to stderr.
Exit codes: 0 ok, 1 bad input, 2 construction not applicable or a failed
oracle check.
"""

import argparse
import json
import logging
import sys

from src.atlas import build_atlas, census
from src.geometry.core import SideId, make_triangle, triangle_from_angles
from src.geometry.errors import GeometryError, InvalidInput, NotApplicable, OutOfRange
from src.log import configure_logging
from src.render.svg import FIGURES, atlas_svg, figure_svg
from src.report import atlas_csv, build_report, calabi_dict, calabi_text, sweep_csv
from src.solvers.calabi import solve_calabi, sweep_isosceles

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_APPLICABLE = 2


class UsageError(InvalidInput):
    """Command line arguments that argparse rejected"""


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Bad arguments are input errors (exit 1), not argparse's exit 2
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _status(message: str):
    print(message, file=sys.stderr)


# --- Argument parsing ---

def _vertex(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInput(f"Vertex must look like X,Y, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise InvalidInput(f"Vertex coordinates must be numbers, got {text!r}") from None


def _side(text: str):
    name, sep, value = text.partition("=")
    if not sep or name not in ("a", "b", "c"):
        raise InvalidInput(f"Side must look like c=2, got {text!r}")
    try:
        return SideId(name), float(value)
    except ValueError:
        raise InvalidInput(f"Side length must be a number, got {text!r}") from None


def _vertices(text: str):
    # One argument so pairs like -1,0 are not taken for options
    pairs = text.replace(";", " ").split()
    if len(pairs) != 3:
        raise InvalidInput(f"--vertices needs three X,Y pairs, got {text!r}")
    return [_vertex(p) for p in pairs]


def triangle_from_args(args):
    """
    Build the triangle named by --vertices or by --angles and --side

    Raises:
        InvalidInput: for malformed or degenerate input
    """
    if args.vertices:
        return make_triangle(*_vertices(args.vertices))
    side, length = _side(args.side)
    return triangle_from_angles(args.angles[0], args.angles[1], length, side)


def _add_triangle_args(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--vertices', metavar='"XA,YA XB,YB XC,YC"',
                       help='Vertices A, B, C as one quoted argument of X,Y pairs')
    group.add_argument('--angles', nargs=2, type=float, metavar='DEG',
                       help='The two angles (degrees) at the ends of --side')
    parser.add_argument('--side', default='c=1', metavar='S=LEN',
                        help='Side between the two --angles and its length')


def build_parser() -> argparse.ArgumentParser:
    """
    The argument parser, with defaults taken from the environment

    Raises:
        ConfigurationError: if an ENCLOSE_* variable is invalid
    """
    from src import settings

    parser = _Parser(
        prog='enclose',
        description='Maximal polygons enclosed in a triangle, and Calabi\'s equal-squares triangle.',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument('--log-level', default=settings.LOG_LEVEL,
                        choices=settings.LOG_LEVELS, help='Logging level (stderr)')
    subparsers = parser.add_subparsers(dest='command', help='Command to execute', required=True)

    # Report command
    report_parser = subparsers.add_parser('report', help='Every maximal polygon of one triangle',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_triangle_args(report_parser)
    report_parser.add_argument('--verify', action='store_true', help='Check closed forms against the oracles')
    report_parser.add_argument('--grid', type=int, default=settings.ORACLE_GRID, metavar='N',
                               help='Oracle grid subdivisions for --verify')
    report_parser.add_argument('--tolerance', type=float, default=settings.VERIFY_TOLERANCE,
                               help='Largest relative oracle delta for --verify')
    report_parser.add_argument('--json', metavar='PATH', help='Write the JSON report here instead of stdout')

    # Sweep command
    sweep_parser = subparsers.add_parser('sweep', help='Leg vs base squares of obtuse isosceles triangles',
                                         formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    sweep_parser.add_argument('--min', dest='apex_min', type=float, default=95.0, help='Smallest apex angle (deg)')
    sweep_parser.add_argument('--max', dest='apex_max', type=float, default=105.0, help='Largest apex angle (deg)')
    sweep_parser.add_argument('--step', type=float, default=0.01, help='Apex angle step (deg)')
    sweep_parser.add_argument('--legs', type=float, default=1.0, help='Leg length')
    sweep_parser.add_argument('--csv', metavar='PATH', help='Write the CSV here instead of stdout')
    sweep_parser.add_argument('--backend', default=settings.ATLAS_BACKEND, choices=settings.ATLAS_BACKENDS)

    # Calabi command
    calabi_parser = subparsers.add_parser('calabi', help='Solve Calabi\'s triangle',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    calabi_parser.add_argument('--digits', type=int, default=7, help='Decimals printed (1-15)')
    calabi_parser.add_argument('--json', metavar='PATH', help='Write full-precision JSON here')

    # Atlas command
    atlas_parser = subparsers.add_parser('atlas', help='Classify apex positions by square ordering',
                                         formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    atlas_parser.add_argument('--nx', type=int, default=60, help='Samples across x (at least 8)')
    atlas_parser.add_argument('--ny', type=int, default=100, help='Samples across y (at least 8)')
    atlas_parser.add_argument('--csv', metavar='PATH', help='Write the CSV here instead of stdout')
    atlas_parser.add_argument('--svg', metavar='PATH', help='Also draw the atlas to this file')
    atlas_parser.add_argument('--backend', default=settings.ATLAS_BACKEND, choices=settings.ATLAS_BACKENDS)

    # Figure command
    figure_parser = subparsers.add_parser('figure', help='Draw one construction as SVG',
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    figure_parser.add_argument('--which', required=True, choices=FIGURES)
    _add_triangle_args(figure_parser)
    figure_parser.add_argument('--base', choices=[s.value for s in SideId],
                               help='Only this side, where the construction allows it')
    figure_parser.add_argument('--svg', metavar='PATH', help='Write the SVG here instead of stdout')
    return parser


# --- Output ---

def _emit(text: str, path=None, what='output'):
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        _status(f"Wrote {what} to {path}")
    else:
        sys.stdout.write(text)


# --- Commands ---

def cmd_report(args) -> int:
    t = triangle_from_args(args)
    report = build_report(t, args.grid if args.verify else None, args.tolerance)
    _emit(report.to_json(), args.json, 'report')
    if not report.passed:
        bad = [c for c in report.verification["checks"] if not c["ok"]]
        raise VerificationFailed(f"{len(bad)} oracle check(s) exceeded tolerance {args.tolerance:g}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.backend == 'celery':
        from src.tasks import sweep_celery
        table = sweep_celery(args.apex_min, args.apex_max, args.step, args.legs)
    else:
        table = sweep_isosceles(args.apex_min, args.apex_max, args.step, args.legs)
    _status(f"Swept {len(table.rows)} apex angles; {len(table.crossings())} sign change(s)")
    _emit(sweep_csv(table), args.csv, 'sweep')
    return EXIT_OK


def cmd_calabi(args) -> int:
    if not 1 <= args.digits <= 15:
        raise OutOfRange(f"--digits must be between 1 and 15, got {args.digits}")
    solution = solve_calabi()
    if args.json:
        _emit(json.dumps(calabi_dict(solution), indent=2, sort_keys=True) + "\n", args.json, 'Calabi solution')
    sys.stdout.write(calabi_text(solution, args.digits))
    return EXIT_OK


def cmd_atlas(args) -> int:
    rows = build_atlas(args.nx, args.ny, args.backend)
    counts = census(rows)
    _status(f"Classified {len(rows)} apex samples")
    for (cls, pattern), n in sorted(counts.items()):
        _status(f"  {cls:<10} {pattern or '-':<4} {n}")
    _emit(atlas_csv(rows), args.csv, 'atlas CSV')
    if args.svg:
        _emit(atlas_svg(rows), args.svg, 'atlas SVG')
    return EXIT_OK


def cmd_figure(args) -> int:
    t = triangle_from_args(args)
    base = SideId(args.base) if args.base else None
    _emit(figure_svg(t, args.which, base), args.svg, f'{args.which} figure')
    return EXIT_OK


COMMANDS = {
    'report': cmd_report,
    'sweep': cmd_sweep,
    'calabi': cmd_calabi,
    'atlas': cmd_atlas,
    'figure': cmd_figure,
}


def main(argv=None) -> int:
    """Run one command and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level)
        return COMMANDS[args.command](args)
    except InvalidInput as e:
        _status(f"Error: {e}")
        return EXIT_INPUT
    except (NotApplicable, VerificationFailed) as e:
        _status(f"Error: {e}")
        return EXIT_NOT_APPLICABLE
    except OSError as e:
        _status(f"Error: {e}")
        return EXIT_INPUT
    except GeometryError as e:
        _status(f"Error: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
