"""
Sweep the closed-form multiplicities against the series engine and collect findings.
"""

import collections
import concurrent.futures
import datetime
import json
import pathlib
from typing import Any, Callable, Dict, List, Optional, TypedDict, Union

import aws_lambda_powertools

from . import __version__
from .closed_forms import formula_ids, get_formula, match_case
from .cocharacters import (
    AlgebraId,
    geometric_proper_square_E,
    hilbert_series,
    lewin_hilbert,
    product_E_E0,
    proper_series_UT2E,
    proper_square_E,
    s1_geometric_proper_square_E,
    s1_product_E_E0,
    shifted_geometric_proper_square_E,
    shifted_product_E_E0,
)
from .config import config
from .errors import TruncationError
from .partitions import generate_partitions
from .schur_ring import SchurSeries, geometric_factor

logger = aws_lambda_powertools.Logger(
    service=config["CONFIG"]["powertools_service_name"], child=True
)

MATCH = "match"
MISMATCH = "mismatch"
NOT_COVERED_STATUS = "not-covered"


class Finding(TypedDict):
    """One partition checked against one formula."""

    formula: str
    statement: str
    partition: List[int]
    engine: int
    formula_value: Optional[int]
    case: Optional[str]
    parameters: Optional[str]
    status: str


class Resolution(TypedDict):
    formula: str
    statement: str
    question: str
    resolution: str


class FindingsReport(TypedDict):
    """
    Data structure written to findings_path. Only generated_at varies between two runs
    with the same configuration.
    """

    tool_version: str
    generated_at: str
    config: Dict[str, Any]
    findings: List[Dict[str, Any]]
    summary: Dict[str, int]
    resolutions: List[Resolution]


SeriesBuilder = Callable[[int, int], SchurSeries]

ENGINE_SERIES: Dict[str, SeriesBuilder] = {
    "product-e-e0": product_E_E0,
    "s1-product-e-e0": s1_product_E_E0,
    "shifted-product-e-e0": shifted_product_E_E0,
    "hilbert-g": lambda truncation, parallelism: hilbert_series(
        AlgebraId.G, truncation, parallelism
    ),
    "proper-square-e": proper_square_E,
    "geometric-proper-square-e": geometric_proper_square_E,
    "s1-geometric-proper-square-e": s1_geometric_proper_square_E,
    "shifted-geometric-proper-square-e": shifted_geometric_proper_square_E,
    "proper-hilbert-ut2e": proper_series_UT2E,
    "hilbert-ut2e": lambda truncation, parallelism: hilbert_series(
        AlgebraId.UT2E, truncation, parallelism
    ),
    # The multiplicity formula for UT2(F) is checked against the product formula over F.
    "hilbert-ut2f": lambda truncation, parallelism: lewin_hilbert(
        geometric_factor(truncation), geometric_factor(truncation), parallelism
    ),
}

RESOLUTIONS: List[Resolution] = [
    {
        "formula": "hilbert-g",
        "statement": get_formula("hilbert-g").statement,
        "question": "Cases 'k2>=2, l>=1', 'k2=0, l>=2', 'l=1' and 'l=0' overlap.",
        "resolution": "Cases are tried in that order, so 'l=1' only applies when k2=0.",
    },
    {
        "formula": "proper-hilbert-ut2e",
        "statement": get_formula("proper-hilbert-ut2e").statement,
        "question": "Case 'm>=2' has no bound on k and no case lists k=2, m=1.",
        "resolution": "k>=3 is matched first, so 'm>=2' only applies to k=2. "
        "k=2, m=1 stays not-covered; the engine gives l+1 there.",
    },
    {
        "formula": "shifted-geometric-proper-square-e",
        "statement": get_formula("shifted-geometric-proper-square-e").statement,
        "question": "Case 'k=2, m>=2' leaves k=2, m=1 open.",
        "resolution": "k=2, m=1 stays not-covered; the engine gives l+1 there.",
    },
    {
        "formula": "hilbert-ut2e",
        "statement": get_formula("hilbert-ut2e").statement,
        "question": "The second family is labelled (k1,k2,2^m,1^l), which repeats the first.",
        "resolution": "Read as (k1,k2,3,2^m,1^l) with k2>=3, m>=1. m=0 stays not-covered; "
        "the engine gives 4(k1-k2+1)(l+1) there.",
    },
    {
        "formula": "hilbert-ut2e",
        "statement": get_formula("hilbert-ut2e").statement,
        "question": "The tabulated chi_6(UT2(E)) lists (2^3) with multiplicity 1.",
        "resolution": "The engine gives 4, agreeing with case 'k1>=k2=2, m>=1' and with "
        "codimension c_6 = 640.",
    },
    {
        "formula": "proper-square-e",
        "statement": get_formula("proper-square-e").statement,
        "question": "The shape is stated as (2^mu2,1^mu1).",
        "resolution": "Read as the conjugate of mu, (2^mu2,1^(mu1-mu2)); so (2,2,1,1) has "
        "multiplicity 2.",
    },
    {
        "formula": "product-e-e0",
        "statement": get_formula("product-e-e0").statement,
        "question": "The hook expansion of H(E) gives no index ranges.",
        "resolution": "Hooks (k,1^l) with k>=1, l>=0 plus the unit term.",
    },
]


def _check_formula(formula_id: str, series: SchurSeries) -> List[Finding]:
    statement = get_formula(formula_id).statement
    findings: List[Finding] = []
    for degree in range(series.truncation + 1):
        for lam in generate_partitions(degree):
            engine = series.coefficient(lam)
            case = match_case(formula_id, lam)
            if case is None:
                status = NOT_COVERED_STATUS
                logger.debug("%s %s not covered, engine value %d", formula_id, lam, engine)
            elif case.value == engine:
                status = MATCH
            else:
                status = MISMATCH
                logger.warning(
                    "%s mismatch at %s: engine %d, formula %d (case %s, %s)",
                    formula_id,
                    list(lam),
                    engine,
                    case.value,
                    case.label,
                    case.parameters.describe(),
                )
            findings.append(
                {
                    "formula": formula_id,
                    "statement": statement,
                    "partition": list(lam),
                    "engine": engine,
                    "formula_value": None if case is None else case.value,
                    "case": None if case is None else case.label,
                    "parameters": None if case is None else case.parameters.describe(),
                    "status": status,
                }
            )
    return findings


def verify_closed_forms(
    formula: str = "all",
    max_degree: int = config["CONFIG"]["verify_max_degree"],
    parallelism: int = 1,
) -> FindingsReport:
    """
    Compare closed forms with the engine for every lambda with |lambda| <= max_degree.

    Parameters:
    -----------
    formula : str
        A formula id, its statement identifier (e.g. "prop-6.2"), or "all".
    max_degree : int
        Truncation of the engine series, at least 1.
    parallelism : int
        Worker threads; formulas are checked concurrently and collected in id order.

    Returns:
    --------
    FindingsReport
        One finding per (formula, lambda), summary counts, and the adopted readings of
        ambiguous cases.
    """
    if max_degree < 1:
        raise TruncationError(f"max_degree must be at least 1. Instead got: {max_degree}")
    selected = formula_ids() if formula == "all" else [get_formula(formula).formula_id]
    for resolution in RESOLUTIONS:
        if resolution["formula"] in selected:
            logger.info(
                "Adopted reading for %s: %s", resolution["formula"], resolution["resolution"]
            )

    def run(formula_id: str) -> List[Finding]:
        return _check_formula(formula_id, ENGINE_SERIES[formula_id](max_degree, parallelism))

    if parallelism > 1 and len(selected) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as executor:
            batches = list(executor.map(run, selected))
    else:
        batches = [run(formula_id) for formula_id in selected]

    findings = [finding for batch in batches for finding in batch]
    counts = collections.Counter(finding["status"] for finding in findings)
    summary = {status: counts.get(status, 0) for status in (MATCH, MISMATCH, NOT_COVERED_STATUS)}
    logger.info(
        "Checked %d formulas up to degree %d: %d match, %d mismatch, %d not covered",
        len(selected),
        max_degree,
        summary[MATCH],
        summary[MISMATCH],
        summary[NOT_COVERED_STATUS],
    )
    return {
        "tool_version": __version__,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "config": {"formula": formula, "max_degree": max_degree, "parallelism": parallelism},
        "findings": [dict(finding) for finding in findings],
        "summary": summary,
        "resolutions": [
            resolution for resolution in RESOLUTIONS if resolution["formula"] in selected
        ],
    }


def has_mismatch(report: Union[FindingsReport, Dict[str, Any]]) -> bool:
    return report["summary"].get(MISMATCH, 0) > 0


def write_report(report: Union[FindingsReport, Dict[str, Any]], path: str) -> pathlib.Path:
    """Write a findings report as indented JSON and return the path written."""
    target = pathlib.Path(path)
    with open(file=target, mode="w", encoding="utf-8") as report_file:
        json.dump(report, report_file, indent=2)
        report_file.write("\n")
    logger.info("Findings written to %s", target)
    return target

