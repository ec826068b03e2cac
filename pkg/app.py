import argparse
import logging
import sys

from commands import register_commands
from commands.command_utils.command_constants import EXIT_USAGE, EXIT_VIOLATION, OUTCOME_ERROR
from commands.command_utils.element_syntax import UsageError
from commands.command_utils.report import emit, make_report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text", help="Report format")
    common.add_argument("--threads", type=int, default=None, help="Worker processes (default $DIOPH_THREADS or 1)")
    common.add_argument("--cache-dir", default=None, help="Result cache directory (default $DIOPH_CACHE_DIR)")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")

    parser = argparse.ArgumentParser(prog="app.py", description="Diophantine m-tuples in imaginary quadratic rings")
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_commands(subparsers, [common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO)
    logger = logging.getLogger(args.command)
    if args.threads is not None and args.threads < 1:
        logger.error("--threads must be positive")
        return EXIT_USAGE

    try:
        return args.callback(args, logger)
    except UsageError as e:
        logger.error(e)
        return EXIT_USAGE
    except ValueError as e:
        # library errors the command did not map itself, e.g. Undecidable or OrbitNotDiverging
        logger.error(e)
        emit(make_report(args.command, {}, OUTCOME_ERROR, {"error": type(e).__name__, "reason": str(e)}), args.format)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
