import argparse
from dataclasses import asdict
from logging import Logger

from gap import a25_threshold, k_constant, proof_constants
from gap.gap_constants import K_BASES, QUOTED_A25_THRESHOLD
from search import cutoff_record
from search.search_constants import DEFAULT_SWEEP_BOUND

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_OK, OUTCOME_VIOLATION
from .command_utils.report import emit, make_report


def register(subparsers, parents):
    parser = subparsers.add_parser("constants", parents=parents, help="Certify the numeric constants of the proof")
    parser.set_defaults(callback=constants_callback)


def constants_callback(args: argparse.Namespace, logger: Logger) -> int:
    steps = proof_constants()
    for step in steps:
        if not step.holds:
            logger.error(f"Proof constant '{step.name}' failed: {step.statement}")

    payload = {
        "steps": [
            {"name": step.name, "statement": step.statement, "holds": step.holds, "detail": step.detail}
            for step in steps
        ],
        "a25_thresholds": {str(base): a25_threshold(k_constant(base)) for base in K_BASES},
        "quoted_a25_threshold": QUOTED_A25_THRESHOLD,
        "sweep_cutoffs": asdict(cutoff_record(DEFAULT_SWEEP_BOUND**2)),
    }
    violated = not all(step.holds for step in steps)
    emit(make_report("constants", {}, OUTCOME_VIOLATION if violated else OUTCOME_OK, payload), args.format)
    return EXIT_VIOLATION if violated else EXIT_OK
