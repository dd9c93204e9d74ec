"""
Command line entry point: `cochar compute|verify|lr|restrict|graded`.

Results go to stdout (or --output) and are byte-stable for a fixed configuration; logs go
to stderr. Exit status: 0 success, 1 usage, 2 verification mismatch, 3 internal
inconsistency.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO, TypedDict

import aws_lambda_powertools

from . import __version__
from .closed_forms import formula_ids, statement_ids
from .cocharacters import AlgebraId, cocharacter, proper_cocharacter
from .config import config
from .errors import (
    ArithmeticOverflowError,
    CocharError,
    NegativeMultiplicityError,
    UsageError,
)
from .graded import (
    RESTRICTION_TABLE,
    RESTRICTION_TABLE_STATEMENT,
    graded_cocharacter_UT2E,
    restrict,
    verify_restriction_table,
)
from .partitions import Partition
from .rendering import (
    FORMATS,
    render_bicharacter,
    render_decomposition,
    render_expansion,
    render_graded,
)
from .tableaux import expand_product, lr_coefficient
from .verification import has_mismatch, verify_closed_forms, write_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INCONSISTENT = 3

class RunConfig(TypedDict, total=False):
    """Flags of one invocation after defaults from config.toml have been applied."""

    command: str
    algebra: str
    degree: int
    proper: bool
    output_format: str
    output: Optional[str]
    truncation: int
    parallelism: int
    formula: str
    max_degree: int
    restriction_max_degree: int
    findings_path: str
    lam: Partition
    mu: Partition
    nu: Partition
    k: int
    log_level: str


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except CocharError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def build_parser() -> argparse.ArgumentParser:
    defaults = config["CONFIG"]
    parser = _Parser(prog="cochar", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cochar {__version__}")
    parser.add_argument(
        "--log-level",
        default=defaults["log_level"],
        help="powertools log level for messages on stderr",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    compute = commands.add_parser("compute", help="degree-n cocharacter of an algebra")
    compute.add_argument(
        "--algebra", choices=[algebra.value for algebra in AlgebraId], required=True
    )
    compute.add_argument("--degree", type=int, required=True)
    compute.add_argument("--proper", action="store_true", help="proper cocharacter instead")
    compute.add_argument("--truncation", type=int, default=None)

    verify = commands.add_parser("verify", help="check closed forms against the engine")
    verify.add_argument(
        "--formula",
        choices=formula_ids()
        + statement_ids()
        + [RESTRICTION_TABLE, RESTRICTION_TABLE_STATEMENT, "all"],
        default="all",
        help="formula id or statement identifier such as prop-6.2",
    )
    verify.add_argument("--max-degree", type=int, default=defaults["verify_max_degree"])
    verify.add_argument(
        "--restriction-max-degree", type=int, default=defaults["restriction_max_degree"]
    )
    verify.add_argument("--findings", default=defaults["findings_path"], help="report path")

    lr = commands.add_parser("lr", help="one Littlewood-Richardson coefficient")
    lr.add_argument("--lambda", dest="lam", type=_partition, required=True)
    lr.add_argument("--mu", type=_partition, required=True)
    lr.add_argument(
        "--nu", type=_partition, default=None, help="omit to print the whole expansion as JSON"
    )

    restriction = commands.add_parser("restrict", help="restrict chi_nu to S_k x S_(n-k)")
    restriction.add_argument("--nu", type=_partition, required=True)
    restriction.add_argument("--k", type=int, required=True)

    graded = commands.add_parser("graded", help="Z2-graded cocharacter of UT2(E)")
    graded.add_argument("--degree", type=int, required=True)

    for subparser in (compute, verify, restriction, graded):
        subparser.add_argument("--parallelism", type=int, default=defaults["parallelism"])
    for subparser in (compute, restriction, graded):
        subparser.add_argument(
            "--format", dest="output_format", choices=FORMATS, default=defaults["output_format"]
        )
        subparser.add_argument("--output", default=None, help="write to a file, not stdout")
    return parser


def parse_run_config(argv: Optional[List[str]] = None) -> RunConfig:
    """
    Parse flags into a RunConfig and check the invariants between them.

    Raises:
    -------
    UsageError
        For unknown flags, degree above truncation, or parallelism below 1.
    """
    arguments: Dict[str, Any] = vars(build_parser().parse_args(argv))
    run_config: RunConfig = {key: value for key, value in arguments.items() if value is not None}  # type: ignore[assignment]
    if run_config.get("parallelism", 1) < 1:
        raise UsageError(f"--parallelism must be at least 1. Instead got: {run_config['parallelism']}")
    if "degree" in run_config and run_config["degree"] < 0:
        raise UsageError(f"--degree must be nonnegative. Instead got: {run_config['degree']}")
    if run_config["command"] == "compute":
        truncation = run_config.get(
            "truncation", max(config["CONFIG"]["default_truncation"], run_config["degree"])
        )
        if run_config["degree"] > truncation:
            raise UsageError(
                f"--degree must not exceed --truncation. Instead got: {run_config['degree']} > {truncation}"
            )
        run_config["truncation"] = truncation
    if run_config["command"] == "verify":
        run_config["findings_path"] = run_config.pop("findings")  # type: ignore[misc]
    return run_config


def _emit(text: str, run_config: RunConfig, stream: TextIO) -> None:
    path = run_config.get("output")
    if path:
        with open(file=path, mode="w", encoding="utf-8") as output_file:
            output_file.write(text)
    else:
        stream.write(text)


def _verify(run_config: RunConfig, logger: aws_lambda_powertools.Logger) -> int:
    formula = run_config["formula"]
    parallelism = run_config["parallelism"]
    table_only = formula in (RESTRICTION_TABLE, RESTRICTION_TABLE_STATEMENT)
    reports = []
    if not table_only:
        reports.append(verify_closed_forms(formula, run_config["max_degree"], parallelism))
    if table_only or formula == "all":
        reports.append(verify_restriction_table(run_config["restriction_max_degree"], parallelism))
    report: Dict[str, Any] = dict(reports[0])
    for extra in reports[1:]:
        report["findings"] = report["findings"] + extra["findings"]
        report["resolutions"] = report["resolutions"] + extra["resolutions"]
        report["summary"] = {
            status: report["summary"].get(status, 0) + extra["summary"].get(status, 0)
            for status in {**report["summary"], **extra["summary"]}
        }
    report["config"] = {
        "formula": formula,
        "max_degree": run_config["max_degree"],
        "restriction_max_degree": run_config["restriction_max_degree"],
        "parallelism": parallelism,
    }
    write_report(report, run_config["findings_path"])
    if has_mismatch(report):
        logger.error("Verification found %d mismatches", report["summary"]["mismatch"])
        return EXIT_MISMATCH
    return EXIT_OK


def run(run_config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Execute one parsed invocation and return its exit status."""
    stream = sys.stdout if stream is None else stream
    logger = aws_lambda_powertools.Logger(
        service=config["CONFIG"]["powertools_service_name"], child=True
    )
    command = run_config["command"]
    if command == "compute":
        build = proper_cocharacter if run_config.get("proper") else cocharacter
        character = build(
            AlgebraId(run_config["algebra"]),
            run_config["degree"],
            truncation=run_config["truncation"],
            parallelism=run_config["parallelism"],
        )
        _emit(render_decomposition(character, run_config["output_format"]), run_config, stream)
    elif command == "verify":
        return _verify(run_config, logger)
    elif command == "lr":
        if "nu" in run_config:
            value = lr_coefficient(run_config["lam"], run_config["mu"], run_config["nu"])
            stream.write(f"{value}\n")
        else:
            stream.write(render_expansion(expand_product(run_config["lam"], run_config["mu"])))
    elif command == "restrict":
        character = restrict(run_config["nu"], run_config["k"])
        _emit(render_bicharacter(character, run_config["output_format"]), run_config, stream)
    elif command == "graded":
        graded = graded_cocharacter_UT2E(run_config["degree"])
        _emit(render_graded(graded, run_config["output_format"]), run_config, stream)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Console script entry point."""
    try:
        run_config = parse_run_config(argv)
    except UsageError as error:
        sys.stderr.write(f"cochar: {error}\n")
        return EXIT_USAGE
    logger = aws_lambda_powertools.Logger(
        service=config["CONFIG"]["powertools_service_name"],
        level=run_config.get("log_level", config["CONFIG"]["log_level"]),
        logger_handler=logging.StreamHandler(sys.stderr),
    )
    logger.debug("Run configuration: %s", run_config)
    try:
        return run(run_config)
    except (NegativeMultiplicityError, ArithmeticOverflowError) as error:
        logger.error("Internal inconsistency: %s", error)
        return EXIT_INCONSISTENT
    except (CocharError, ValueError) as error:
        logger.error("Invalid request: %s", error)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
