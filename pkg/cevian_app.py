import argparse
import sys
from typing import Callable, Dict, List, Optional

from cli_requests import (
    BaseRequest,
    CommandResponse,
    CountRequest,
    FanRequest,
    RenderRequest,
    ScanRequest,
    SeqRequest,
    TableRequest,
)
from utils import (
    logger,
    set_log_level,
    PreconditionError,
    EXIT_VALIDATION_ERROR,
    HIGHLIGHT_NONE,
    SEQUENCE_FORMATS,
    SEQUENCE_NAMES,
    TABLE_FORMATS,
    VALID_FAMILIES,
)


class CevianArgumentParser(argparse.ArgumentParser):
    """Usage errors become validation errors (exit 1) instead of argparse's exit 2."""

    def error(self, message):
        raise PreconditionError(f"{self.prog}: {message}", parameter="argv")


def _add_config_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_argument_group("config source (exactly one)")
    source.add_argument("--a", metavar="FEET", help="A-cevian feet on BC, e.g. 1/3,1/2")
    source.add_argument("--b", metavar="FEET", help="B-cevian feet on CA")
    source.add_argument("--c", metavar="FEET", help="C-cevian feet on AB")
    source.add_argument("--config", metavar="FILE", help="key-value file with feet_a, feet_b, feet_c")
    source.add_argument("--equal", metavar="N", type=int, help="equal division: feet at i/N for 0 < i < N")


def build_parser() -> argparse.ArgumentParser:
    parser = CevianArgumentParser(
        prog="cevian",
        description="Count triangles in cevian arrangements of a triangle.")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker processes for scans and the oracle (default CEVIAN_WORKERS or 1)")
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="triangle count for one configuration")
    _add_config_source(count)
    count.add_argument("--oracle", action="store_true", help="also enumerate triangles by brute force")
    count.add_argument("--json", action="store_true")
    count.add_argument("--force", action="store_true", help="lift the oracle segment guard rail")
    count.add_argument("--affine-check", action="store_true",
                       help="rebuild on a second triangle and compare d and oracle counts")

    table = commands.add_parser("table", help="equal-division counts over a range of n")
    table.add_argument("--equal-range", nargs=2, type=int, metavar=("N_MIN", "N_MAX"), required=True)
    table.add_argument("--format", choices=TABLE_FORMATS, default="table")

    scan = commands.add_parser("scan", help="look for concurrencies in a prime family")
    scan.add_argument("--family", choices=VALID_FAMILIES, required=True,
                      help="1: n = p(2p-1); 2: n = p^2(2p+1)")
    scan.add_argument("--p-max", type=int, required=True)
    scan.add_argument("--count-all", action="store_true", help="count every solution, not only existence")
    scan.add_argument("--json", action="store_true")

    render = commands.add_parser("render", help="SVG figure of a configuration")
    _add_config_source(render)
    render.add_argument("--out", metavar="FILE.svg", help="output path; stdout when omitted")
    render.add_argument("--highlight", nargs="+", default=[HIGHLIGHT_NONE], metavar="MODE",
                        help="none | all-triangles | triple i,j,k")
    render.add_argument("--force", action="store_true", help="lift the oracle segment guard rail")

    seq = commands.add_parser("seq", help="emit an integer sequence")
    seq.add_argument("--name", choices=SEQUENCE_NAMES, required=True)
    seq.add_argument("--limit", type=int, required=True)
    seq.add_argument("--format", choices=SEQUENCE_FORMATS, default="lines")

    fan = commands.add_parser("fan", help="triangles among apex lines and base parallels")
    fan.add_argument("--apex", type=int, required=True)
    fan.add_argument("--parallel", type=int, required=True)
    fan.add_argument("--json", action="store_true")

    return parser


###Commands

def count(args) -> CommandResponse:
    logger.info('Count command received a request')
    handler = CountRequest(args, command='count')
    return handler.response

def table(args) -> CommandResponse:
    logger.info('Table command received a request')
    handler = TableRequest(args, command='table')
    return handler.response

def scan(args) -> CommandResponse:
    logger.info('Scan command received a request')
    handler = ScanRequest(args, command='scan')
    return handler.response

def render(args) -> CommandResponse:
    logger.info('Render command received a request')
    handler = RenderRequest(args, command='render')
    return handler.response

def seq(args) -> CommandResponse:
    logger.info('Seq command received a request')
    handler = SeqRequest(args, command='seq')
    return handler.response

def fan(args) -> CommandResponse:
    logger.info('Fan command received a request')
    handler = FanRequest(args, command='fan')
    return handler.response


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResponse]] = {
    'count': count,
    'table': table,
    'scan': scan,
    'render': render,
    'seq': seq,
    'fan': fan,
}


def run(argv: Optional[List[str]] = None) -> CommandResponse:
    """Parse argv and dispatch; never writes to stdout itself."""
    try:
        args = build_parser().parse_args(argv)
    except PreconditionError as e:
        return BaseRequest(argparse.Namespace(), command="parse").return_exception(e)

    if args.verbose:
        set_log_level("DEBUG")
    return COMMANDS[args.command](args)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        response = run(argv)
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION_ERROR

    sys.stdout.write(response.stdout)
    sys.stdout.flush()
    if response.error is not None:
        sys.stderr.write(response.stderr)
    logger.flush_logger()
    return response.exit_code


if __name__ == "__main__":
    sys.exit(main())
