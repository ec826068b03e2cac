import argparse
from logging import Logger

from gap import NoContradiction, chain_certificate
from gap.gap_constants import CHAIN_TARGET, K_BASES, K_PROOF_BASE

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_INAPPLICABLE, OUTCOME_OK
from .command_utils.element_syntax import UsageError
from .command_utils.report import emit, make_report


def register(subparsers, parents):
    parser = subparsers.add_parser("chain", parents=parents, help="Certify the lower-bound chain contradiction")
    parser.add_argument("--m", type=int, default=CHAIN_TARGET, help="Tuple size m")
    parser.add_argument("--k-base", type=int, choices=K_BASES, default=K_PROOF_BASE, help="Base of K = base^20")
    parser.set_defaults(callback=chain_callback)


def _certificate_payload(certificate):
    return {
        "m": certificate.m,
        "lower_bounds": certificate.lower_bounds,
        "upper_bound_rhs": certificate.upper_bound_rhs,
        "contradiction_at": certificate.contradiction_at,
        "relative_checks": certificate.relative_checks,
        "gap_hypotheses": certificate.gap_hypotheses,
        "a25_threshold": certificate.a25_threshold,
        "quoted_threshold": certificate.quoted_threshold,
        "a25_exceeds_threshold": certificate.a25_exceeds_threshold,
    }


def chain_callback(args: argparse.Namespace, logger: Logger) -> int:
    config = {"m": args.m, "k_base": args.k_base}
    if args.m < 1:
        raise UsageError(f"--m must be positive, got {args.m}")
    try:
        certificate = chain_certificate(args.m, k_base=args.k_base)
    except NoContradiction as e:
        logger.error(e)
        payload = _certificate_payload(e.certificate)
        emit(make_report("chain", config, OUTCOME_INAPPLICABLE, payload, k_base=args.k_base), args.format)
        return EXIT_VIOLATION

    emit(make_report("chain", config, OUTCOME_OK, _certificate_payload(certificate), k_base=args.k_base), args.format)
    return EXIT_OK
