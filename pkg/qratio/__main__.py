"""QRATIO

Command Line Usage:

python -m qratio
    [--precision-bits]
    [--format json|text]
    [--seed]
    [--workers]
    [--config]
    [--logFile]
    [--consoleLogLevel]
    [--fileLogLevel]
    {analyze, oracle, gen, verify-conjecture, cone-check, cone-sample} ...

Exit codes: 0 on success, 2 for bad input, 3 if a certificate contradicts the root oracle, 1 for anything else.
"""
from __future__ import annotations

import argparse
import logging
import sys
import typing as tp
from fractions import Fraction

from qratio._logging import CONSOLE_HANDLER, add_file_handler
from qratio.commands import (
    OutputFormat,
    cmd_analyze,
    cmd_cone_check,
    cmd_cone_sample,
    cmd_gen,
    cmd_oracle,
    cmd_verify_conjecture,
    render,
)
from qratio.config import load_config
from qratio.enums import Family
from qratio.exceptions import BadParams, NotApplicableError, QRatioInputError, SoundnessViolation
from qratio.utilities import word_wrap

LOG_LEVELS = {"debug", "info", "warning", "error", "fatal", "critical"}
_LOGGER = logging.getLogger("qratio")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BAD_INPUT = 2
EXIT_SOUNDNESS = 3


parser = argparse.ArgumentParser(
    prog="qratio",
    description="Exact real-root bounds from coefficient ratios, checked against a Sturm oracle.",
    formatter_class=argparse.RawTextHelpFormatter,
)
parser.add_argument(
    "--precision-bits",
    type=int,
    default=None,
    help=word_wrap(
        "Width of certified enclosures of transcendental thresholds, in bits. Defaults to 128 (or `PrecisionBits` "
        "from the config file)."
    ),
)
parser.add_argument(
    "--format",
    choices=[str(f) for f in OutputFormat],
    default=str(OutputFormat.JSON),
    help=word_wrap("Report format on stdout. JSON emits exact rationals as 'p/q' strings."),
)
parser.add_argument("--seed", type=int, default=0, help=word_wrap("Seed for `cone-sample`."))
parser.add_argument(
    "--workers",
    type=int,
    default=None,
    help=word_wrap("Worker processes for sweeps and sampling. 0 means one per physical core. Defaults to 1."),
)
parser.add_argument(
    "--config",
    default=None,
    help=word_wrap("JSON config file. Defaults to `qratio_config.json` in the working directory, if present."),
)
parser.add_argument("--logFile", default=None, help=word_wrap("Also write log records to this file."))
parser.add_argument(
    "--consoleLogLevel",
    action="store",
    default="WARNING",
    help=word_wrap("Set the console log level to 'DEBUG', 'INFO', 'WARNING', 'ERROR', or 'CRITICAL'."),
)
parser.add_argument(
    "--fileLogLevel",
    action="store",
    default="DEBUG",
    help=word_wrap("Set the file log level to 'DEBUG', 'INFO', 'WARNING', 'ERROR', or 'CRITICAL'."),
)

subparsers = parser.add_subparsers(dest="command", required=True)

analyze_parser = subparsers.add_parser("analyze", help=word_wrap("Run every criterion and the oracle on a file."))
analyze_parser.add_argument("path", help=word_wrap("Polynomial text file (one coefficient per line, a_0 first)."))

oracle_parser = subparsers.add_parser("oracle", help=word_wrap("Exact real root count and isolating intervals."))
oracle_parser.add_argument("path", help=word_wrap("Polynomial text file."))
oracle_parser.add_argument(
    "--width", default=None, help=word_wrap("Refine isolating intervals to at most this width ('p/q').")
)

gen_parser = subparsers.add_parser("gen", help=word_wrap("Write a member of a named polynomial family."))
gen_parser.add_argument("family", choices=[str(f) for f in Family])
gen_parser.add_argument("--n", type=int, default=None, help=word_wrap("Degree."))
gen_parser.add_argument("--m", type=int, default=None, help=word_wrap("`sharp-pr1` window length."))
gen_parser.add_argument("--j", type=int, default=None, help=word_wrap("`sharp-pr1` window start."))
gen_parser.add_argument("--l", type=int, default=None, help=word_wrap("`stratum` real root count."))
gen_parser.add_argument("--output", "-o", default=None, help=word_wrap("Write here instead of stdout."))

verify_parser = subparsers.add_parser(
    "verify-conjecture", help=word_wrap("Evaluate a conjecture on the counterexample tower Q_15..Q_{n-max}.")
)
verify_parser.add_argument("--id", type=int, required=True, choices=(1, 2, 3), dest="conjecture_id")
verify_parser.add_argument("--n-max", type=int, required=True, dest="n_max")

cone_check_parser = subparsers.add_parser("cone-check", help=word_wrap("Decide cone membership of a polynomial."))
cone_check_parser.add_argument(
    "spec", help=word_wrap("Cone spec JSON file, or 'hutchinson', 'newton', 'theorem-a', 'theorem-b'.")
)
cone_check_parser.add_argument("path", help=word_wrap("Polynomial text file."))

cone_sample_parser = subparsers.add_parser(
    "cone-sample", help=word_wrap("Sample a cone and histogram exact real root counts.")
)
cone_sample_parser.add_argument(
    "spec", help=word_wrap("Cone spec JSON file, or 'hutchinson', 'newton', 'theorem-a', 'theorem-b'.")
)
cone_sample_parser.add_argument("--n", type=int, default=None, help=word_wrap("Degree (required for named cones)."))
cone_sample_parser.add_argument("--count", type=int, default=1000, help=word_wrap("Number of samples."))


def _parse_log_level(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        if value.lower() not in LOG_LEVELS:
            raise BadParams(f"Log level must be one of: {LOG_LEVELS}")
        return getattr(logging, value.upper())


def _parse_width(value: str | None) -> Fraction | None:
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise BadParams(f"Invalid interval width: {value!r}")


def _dispatch(args, config) -> tp.Any:
    match args.command:
        case "analyze":
            return cmd_analyze(args.path, config)
        case "oracle":
            return cmd_oracle(args.path, _parse_width(args.width))
        case "gen":
            return cmd_gen(args.family, args.output, n=args.n, m=args.m, j=args.j, l=args.l)
        case "verify-conjecture":
            return cmd_verify_conjecture(args.conjecture_id, args.n_max, config.workers)
        case "cone-check":
            return cmd_cone_check(args.spec, args.path, config)
        case "cone-sample":
            return cmd_cone_sample(args.spec, args.n, args.count, args.seed, config)
    raise ValueError(f"Unknown command: {args.command}")


def qratio_main(args) -> int:

    try:
        CONSOLE_HANDLER.setLevel(_parse_log_level(args.consoleLogLevel))
        if args.logFile:
            add_file_handler(args.logFile, _parse_log_level(args.fileLogLevel))
        config = load_config(args.config).with_overrides(precision_bits=args.precision_bits, workers=args.workers)
        result = _dispatch(args, config)
    except SoundnessViolation as ex:
        _LOGGER.error(f"Soundness violation: {ex}")
        return EXIT_SOUNDNESS
    except (QRatioInputError, NotApplicableError) as ex:
        _LOGGER.error(str(ex))
        return EXIT_BAD_INPUT
    except Exception as ex:
        _LOGGER.exception(f"Error occurred in qratio.__main__: {ex}")
        return EXIT_ERROR

    if isinstance(result, str):
        # `gen` returns polynomial text, written to a file when `--output` is given.
        if args.command != "gen" or not args.output:
            sys.stdout.write(result)
        else:
            _LOGGER.info(f"Wrote {args.output}")
    else:
        sys.stdout.write(render(result, args.format) + "\n")
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    return qratio_main(parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(run())
