"""
Certified comparisons on real numbers built from square roots, logarithms and fractional powers of integers.

Every evaluation gets its own MPIntervalContext, so precision escalation never leaks between calls. A comparison is
accepted only when the two enclosures are disjoint; otherwise precision doubles until INTERVAL_MAX_BITS.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from mpmath.ctx_iv import MPIntervalContext

from .gap_constants import ENCLOSURE_DIGITS, INTERVAL_MAX_BITS, INTERVAL_START_BITS
from .gap_errors import Undecidable

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Enclosure:
    text: str
    bits: int

    def __str__(self) -> str:
        return self.text


def interval_context(bits: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def exact(ctx: MPIntervalContext, q: Number):
    """Tight enclosure of an int or Fraction."""
    if isinstance(q, Fraction):
        return ctx.mpf(q.numerator) / q.denominator
    return ctx.mpf(q)


def power(ctx: MPIntervalContext, x, e: Number):
    """x ** e for a positive interval x and rational exponent e, as exp(e log x)."""
    return ctx.exp(exact(ctx, e) * ctx.log(x))


def strictly_less(lhs, rhs) -> Optional[bool]:
    """True or False once the enclosures separate, None while they overlap."""
    return lhs < rhs


def less_equal(lhs, rhs) -> Optional[bool]:
    return lhs <= rhs


def decide(compare: Callable[[MPIntervalContext], Optional[bool]], description: str) -> bool:
    bits = INTERVAL_START_BITS
    while bits <= INTERVAL_MAX_BITS:
        verdict = compare(interval_context(bits))
        if verdict is not None:
            logger.debug(f"Certified '{description}' = {verdict} at {bits} bits")
            return verdict
        bits *= 2
    raise Undecidable(description, INTERVAL_MAX_BITS)


def enclose(evaluate: Callable[[MPIntervalContext], object], description: str, digits: int = ENCLOSURE_DIGITS) -> Enclosure:
    """
    Evaluate until the enclosure is narrower than 10^-digits relative to its size and render it. evaluate may return
    None when the quantity is not yet defined at the current precision.
    """
    bits = INTERVAL_START_BITS
    while bits <= INTERVAL_MAX_BITS:
        ctx = interval_context(bits)
        value = evaluate(ctx)
        if value is not None:
            tolerance = ctx.mpf(10) ** -digits * (1 + abs(value))
            if (value.delta < tolerance) is True:
                return Enclosure(text=ctx.nstr(value, digits), bits=bits)
        bits *= 2
    raise Undecidable(f"enclosure of {description}", INTERVAL_MAX_BITS)
