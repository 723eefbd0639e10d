"""
Command-line entry: parse, apply overrides, dispatch, emit.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
and parameter errors (including exceeded caps).
"""

import sys
import time
from typing import List, Optional

from pydantic import ValidationError

from config.settings import apply_overrides, settings
from config.logging_config import configure_logging, get_logger
from groups.errors import ParityGroupError, VerificationFailure
from validation.error_formatter import format_usage_errors
from verification.report import Report

from .commands import HANDLERS, UsageError
from .output import emit
from .parser import SETTINGS_FLAGS, build_parser, flag_name

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# namespace entries that are not command parameters
_NON_PARAMS = {"verb", "subverb", "format", "log_level", "log_format"}


def _params(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in _NON_PARAMS and v is not None and v is not False}


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; the report goes to standard output, diagnostics to standard error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        apply_overrides(
            **{name: getattr(args, name) for name in SETTINGS_FLAGS},
            log_level=args.log_level,
            log_format=args.log_format,
        )
    except ValidationError as e:
        messages = [f"{flag_name(str(err['loc'][0]))}: {err['msg']}" for err in e.errors()]
        print(format_usage_errors(messages), file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level, settings.log_format)

    command = f"{args.verb} {args.subverb}"
    report = Report(command=command, params=_params(args))
    handler = HANDLERS[(args.verb, args.subverb)]
    started = time.perf_counter()
    try:
        handler(args, report)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as e:
        logger.error("%s: %s", command, e)
        print(format_usage_errors([f"verification failed: {e}"]), file=sys.stderr)
        return EXIT_FAILED
    except ParityGroupError as e:
        print(format_usage_errors([str(e)]), file=sys.stderr)
        return EXIT_USAGE
    report.elapsed_seconds = round(time.perf_counter() - started, 3)

    print(emit(report, args.format))
    logger.info("%s finished: %s", command, "PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    sys.exit(run(sys.argv[1:]))
