"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data error (bad hierarchy, sequences or
pattern, unreadable files), 3 internal invariant violation.
"""

import argparse
import sys
import traceback

from loguru import logger

from fstminer.data import DataError, HierarchyError
from fstminer.patterns import PatternError
from fstminer.scripts import COMMANDS, RunConfig, UsageError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="fstminer",
        description="Mine frequent sequences described by pattern expressions",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--data", "--input", dest="data", help="sequence file, one sequence per line"
    )
    common.add_argument("--hierarchy", help="child<TAB>parent hierarchy file")
    common.add_argument("--output", help="result file (defaults to stdout)")
    common.add_argument("--verbose", action="store_true", help="log debug messages")

    pattern = _ArgumentParser(add_help=False)
    pattern.add_argument("--pattern", help="pattern expression")
    pattern.add_argument(
        "--partial",
        action="store_true",
        help="let matches start and end anywhere in a sequence",
    )

    mine = subparsers.add_parser(
        "mine", parents=[common, pattern], help="mine frequent sequences"
    )
    mine.add_argument("--sigma", type=int, default=1, help="minimum support")
    mine.add_argument(
        "--algorithm", choices=["naive", "count", "dfs"], default="dfs"
    )
    mine.add_argument("--pbar", action="store_true", help="show progress bars")

    match = subparsers.add_parser(
        "match", parents=[common, pattern], help="print generated sequences"
    )
    match.add_argument(
        "--sigma", type=int, default=1, help="drop outputs with infrequent items"
    )

    compile_ = subparsers.add_parser(
        "compile", parents=[common, pattern], help="print the compiled cFST"
    )
    compile_.add_argument("--dot", help="also write a Graphviz rendering")

    stats = subparsers.add_parser(
        "stats", parents=[common], help="print dataset statistics"
    )
    stats.add_argument("--flist", help="also write the f-list to this file")
    return parser


def configure_logging(verbose: bool):
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig(**vars(args))
    except UsageError as e:
        print(f"fstminer: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(config.verbose)
    try:
        COMMANDS[config.command](config)
    except (HierarchyError, DataError, PatternError, OSError) as e:
        logger.error(str(e))
        return EXIT_DATA
    except AssertionError:
        logger.error(
            "Internal invariant violated, please report this:\n"
            + traceback.format_exc()
        )
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
