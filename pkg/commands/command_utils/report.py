"""
Reports printed by every command. JSON output is the stable interface: keys sorted, integers in the payload rendered
as decimal strings, no timing data, so identical flags give identical bytes.
"""

import json
import os
from typing import Any, Dict, Optional, TypedDict

from gap.gap_constants import (
    INTERVAL_MAX_BITS,
    INTERVAL_START_BITS,
    K_EXPONENTS,
    K_PROOF_BASE,
    K_STATEMENT_BASE,
)
from ring import RingElem, describe
from search.search_constants import DEFAULT_SWEEP_BOUND
from tuples import DiophTuple

from .command_constants import REPORT_SCHEMA, TEXT_DIGITS, THREADS_ENV
from .element_syntax import UsageError, format_elements


class Report(TypedDict):
    schema: int
    command: str
    config: Dict[str, Any]
    outcome: str
    payload: Dict[str, Any]
    constants: Dict[str, Any]


def constants_in_use(k_base: int = K_PROOF_BASE) -> Dict[str, Any]:
    return {
        "K": f"{k_base}^{K_EXPONENTS}",
        "K_proof_base": K_PROOF_BASE,
        "K_statement_base": K_STATEMENT_BASE,
        "interval_bits": [INTERVAL_START_BITS, INTERVAL_MAX_BITS],
        "sweep_bound": DEFAULT_SWEEP_BOUND,
    }


def exact_numbers(value):
    """Render every int (not bool) as a decimal string, recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(key): exact_numbers(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact_numbers(item) for item in value]
    return value


def make_report(
    command: str, config: Dict[str, Any], outcome: str, payload: Dict[str, Any], k_base: int = K_PROOF_BASE
) -> Report:
    return Report(
        schema=REPORT_SCHEMA,
        command=command,
        config=config,
        outcome=outcome,
        payload=exact_numbers(payload),
        constants=constants_in_use(k_base),
    )


def element_payload(e: RingElem) -> Dict[str, Any]:
    return {"value": describe(e), "coords": [e.u, e.v]}


def tuple_payload(t: DiophTuple) -> Dict[str, Any]:
    return {
        "d": t.spec.d,
        "elems": [describe(e) for e in t.elems],
        "elems_arg": format_elements(t.elems),
        "witnesses": [[i, j, describe(r)] for (i, j), r in sorted(t.witnesses.items())],
    }


def _abbreviate(text: str) -> str:
    if text.lstrip("-").isdigit() and len(text) > TEXT_DIGITS:
        return f"{text[:12]}...{text[-12:]} ({len(text.lstrip('-'))} digits)"
    return text


def _key_order(key):
    text = str(key)
    return (0, int(text), "") if text.lstrip("-").isdigit() else (1, 0, text)


def _text_lines(value, indent: int):
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value, key=_key_order):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {_abbreviate(str(item))}"
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {_abbreviate(str(item))}"
    else:
        yield f"{pad}{_abbreviate(str(value))}"


def render(report: Report, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    lines = [f"{report['command']}: {report['outcome']}"]
    lines.extend(_text_lines(report["payload"], 1))
    return "\n".join(lines)


def emit(report: Report, output_format: str):
    print(render(report, output_format))


def resolve_threads(requested: Optional[int]) -> int:
    if requested:
        return requested
    text = os.environ.get(THREADS_ENV, "1")
    try:
        threads = int(text)
    except ValueError:
        raise UsageError(f"${THREADS_ENV} must be a positive integer, got '{text}'")
    if threads < 1:
        raise UsageError(f"${THREADS_ENV} must be a positive integer, got {threads}")
    return threads
