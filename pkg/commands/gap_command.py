import argparse
from logging import Logger

from gap import (
    DegenerateInput,
    PreconditionViolated,
    TheoremInapplicable,
    approx_check,
    gap_principle,
    jz_quantities,
)
from gap.gap_constants import K_BASES, K_PROOF_BASE
from pell import build_system, solution_from_extension
from ring import canonical_key, describe
from tuples import TupleError

from .command_utils.command_constants import (
    EXIT_OK,
    EXIT_VIOLATION,
    OUTCOME_INAPPLICABLE,
    OUTCOME_OK,
    OUTCOME_VIOLATION,
)
from .command_utils.element_syntax import UsageError, coordinates, elements, format_elements, ring_spec
from .command_utils.report import emit, make_report

"""
Callback for the 'gap' command: the gap principle on a triple {a, b, c}, the approximation-theorem quantities behind
it, and with a fourth element d the simultaneous-approximation check on the Pell solution d induces.
"""


def register(subparsers, parents):
    parser = subparsers.add_parser("gap", parents=parents, help="Gap principle and approximation checks for a triple")
    parser.add_argument("--d", type=ring_spec, required=True, help="Negative squarefree d of the ring")
    parser.add_argument("--elems", type=coordinates, required=True, help='"a;b;c" or "a;b;c;d" as u,v coordinates')
    parser.add_argument("--k-base", type=int, choices=K_BASES, default=K_PROOF_BASE, help="Base of K = base^20")
    parser.set_defaults(callback=gap_callback)


def _quantity(q):
    if q is None:
        return None
    return {"exact": q.exact, "enclosure": q.enclosure.text, "bits": q.enclosure.bits}


def _jz_payload(report):
    return {
        "a1": describe(report.a1),
        "a2": describe(report.a2),
        "T": describe(report.T),
        "M_sq": report.m_sq,
        "L": _quantity(report.L),
        "P": _quantity(report.P),
        "l": _quantity(report.l),
        "p": _quantity(report.p),
        "lambda": _quantity(report.lam),
        "c": _quantity(report.c_const),
        "preconditions": report.preconds_ok,
    }


def _approximation_payload(triple, d):
    system = build_system(*triple)
    solution = solution_from_extension(system, d)
    report = approx_check(system.a, system.b, system.c, solution)
    return {
        "solution": {"x": describe(solution.x), "y": describe(solution.y), "z": describe(solution.z)},
        "theta1_holds": report.first_holds,
        "theta2_holds": report.second_holds,
        "margins": {name: enclosure.text for name, enclosure in report.margins.items()},
    }


def gap_callback(args: argparse.Namespace, logger: Logger) -> int:
    spec = args.d
    given = elements(spec, args.elems)
    if len(given) not in (3, 4):
        raise UsageError(f"gap takes three or four elements, got {len(given)}")
    a, b, c = sorted(given[:3], key=canonical_key)
    config = {"d": spec.d, "elems": format_elements(given), "k_base": args.k_base}
    payload = {}
    outcome = OUTCOME_OK

    try:
        payload["jz"] = _jz_payload(jz_quantities(b, a, a * b * c, strict=False))
    except DegenerateInput as e:
        logger.error(e)
        payload["jz"] = {"degenerate": str(e)}

    try:
        result = gap_principle(a, b, c, k_base=args.k_base)
        payload["gap_principle"] = {
            "hypotheses": result.hypotheses,
            "certified": result.certified,
            "bound_abs_sq_d": result.bound,
            "sound": result.sound,
        }
        if not result.sound:
            outcome = OUTCOME_VIOLATION
    except (PreconditionViolated, TheoremInapplicable) as e:
        logger.error(e)
        payload["gap_principle"] = {"inapplicable": str(e), "failed": getattr(e, "failed", [])}
        outcome = OUTCOME_INAPPLICABLE

    if len(given) == 4:
        try:
            approximation = _approximation_payload(given[:3], given[3])
            payload["approximation"] = approximation
            if not (approximation["theta1_holds"] and approximation["theta2_holds"]):
                outcome = OUTCOME_VIOLATION
        except PreconditionViolated as e:
            logger.error(e)
            payload["approximation"] = {"inapplicable": str(e), "failed": e.failed}
            outcome = OUTCOME_INAPPLICABLE if outcome == OUTCOME_OK else outcome
        except TupleError as e:
            logger.error(e)
            payload["approximation"] = {"inapplicable": str(e), "failed": []}
            outcome = OUTCOME_INAPPLICABLE if outcome == OUTCOME_OK else outcome

    emit(make_report("gap", config, outcome, payload, k_base=args.k_base), args.format)
    return EXIT_OK if outcome == OUTCOME_OK else EXIT_VIOLATION
