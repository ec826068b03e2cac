"""
Regular triples and the extension formulas built from them.

A triple {a, b, c} is regular when c = a + b +- 2r with r^2 = ab + 1. The same square-root bookkeeping gives the
two standard extensions of a triple to a quadruple and the pair c+-, c- used when bounding the fourth element.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ring import (
    RingElem,
    RingSpec,
    abs_sq,
    canonical_key,
    describe,
    enumerate_up_to,
    from_int,
    is_square,
    sqrt_in_ring,
    try_divide,
)

from .dioph_tuple import DiophTuple, canonical_witness, is_diophantine_pair, make_tuple
from .tuple_errors import NotAPair, NotATriple, TupleError, ZeroElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionCandidates:
    verified: Tuple[RingElem, ...]
    rejected: Tuple[RingElem, ...]


def _sorted(elements) -> Tuple[RingElem, ...]:
    return tuple(sorted(set(elements), key=canonical_key))


def _extends(triple_or_pair, d: RingElem) -> bool:
    return all(canonical_witness(e * d + 1) is not None for e in triple_or_pair)


def _triple_witnesses(a: RingElem, b: RingElem, c: RingElem) -> Tuple[RingElem, RingElem, RingElem]:
    try:
        make_tuple(a.spec, (a, b, c))
    except TupleError as e:
        raise NotATriple(f"{{{describe(a)}, {describe(b)}, {describe(c)}}} is not a Diophantine triple: {e}") from e
    return canonical_witness(a * b + 1), canonical_witness(a * c + 1), canonical_witness(b * c + 1)


def regular_extensions(a: RingElem, b: RingElem) -> Tuple[RingElem, ...]:
    r = is_diophantine_pair(a, b)
    if r is None:
        raise NotAPair(f"{describe(a)} * {describe(b)} + 1 is not a square")
    candidates = [a + b + 2 * r, a + b - 2 * r]
    extensions = []
    for c in candidates:
        if not c or c in (a, b):
            continue
        if not _extends((a, b), c):
            logger.warning(f"Regular candidate {describe(c)} does not extend {{{describe(a)}, {describe(b)}}}")
            continue
        extensions.append(c)
    return _sorted(extensions)


def is_regular_triple(a: RingElem, b: RingElem, c: RingElem) -> bool:
    _triple_witnesses(a, b, c)
    return c in regular_extensions(a, b) or a in regular_extensions(b, c) or b in regular_extensions(a, c)


def quadruple_extension_candidates(a: RingElem, b: RingElem, c: RingElem) -> ExtensionCandidates:
    """a + b + c + 2abc +- 2rst, minus {0, a, b, c}, each checked against the definition."""
    r, s, t = _triple_witnesses(a, b, c)
    base = a + b + c + 2 * a * b * c
    rst = r * s * t
    verified, rejected = [], []
    for d in (base + 2 * rst, base - 2 * rst):
        if not d or d in (a, b, c):
            continue
        (verified if _extends((a, b, c), d) else rejected).append(d)
    return ExtensionCandidates(verified=_sorted(verified), rejected=_sorted(rejected))


def c_plus_minus(a: RingElem, b: RingElem, d: RingElem) -> Tuple[RingElem, RingElem]:
    """
    (c+, c-) = a + b + d + 2abd +- 2rxy with r^2 = ab + 1, x^2 = ad + 1, y^2 = bd + 1.

    The pair always satisfies c+ * c- = a^2 + b^2 + d^2 - 2ab - 2ad - 2bd - 4.
    """
    r, x, y = _triple_witnesses(a, b, d)
    base = a + b + d + 2 * a * b * d
    c_plus, c_minus = base + 2 * r * x * y, base - 2 * r * x * y
    if c_plus * c_minus != c_plus_minus_product(a, b, d):
        raise ArithmeticError(f"c+ c- identity failed for {{{describe(a)}, {describe(b)}, {describe(d)}}}")
    return c_plus, c_minus


def c_plus_minus_product(a: RingElem, b: RingElem, d: RingElem) -> RingElem:
    return a * a + b * b + d * d - 2 * a * b - 2 * a * d - 2 * b * d - 4


def forbidden_double_regular(a: RingElem, b: RingElem, c: RingElem, d: RingElem) -> bool:
    """
    True iff {c, d} = {a + b - 2r, a + b + 2r} for a square root r of ab + 1.

    The pairing is impossible in a Diophantine quadruple whose elements all have abs_sq >= 4, so a True result on a
    verified quadruple of that size would be a counterexample.
    """
    if not all((a, b, c, d)):
        raise ZeroElement()
    for r in sqrt_in_ring(a * b + 1):
        if {c, d} == {a + b - 2 * r, a + b + 2 * r}:
            return True
    return False


def products_not_squares(a: RingElem, b: RingElem, c: RingElem) -> Dict[str, bool]:
    """For a Diophantine triple, ab, ac and bc are never squares; a False entry is a counterexample."""
    _triple_witnesses(a, b, c)
    return {
        "ab": not is_square(a * b),
        "ac": not is_square(a * c),
        "bc": not is_square(b * c),
    }


def double_regular_census(spec: RingSpec, min_abs_sq: int, max_abs_sq: int) -> List[DiophTuple]:
    """
    Triples {a, b, a+b-2r} and {a, b, a+b+2r} for pairs {a, b} in the annulus min_abs_sq <= abs_sq <= max_abs_sq
    whose two regular extensions are both available (nonzero and distinct from a and b).
    """
    annulus = [z for z in enumerate_up_to(spec, max_abs_sq) if abs_sq(z) >= min_abs_sq]
    found = {}
    for a, b in combinations(annulus, 2):
        r = is_diophantine_pair(a, b)
        if r is None:
            continue
        branches = (a + b - 2 * r, a + b + 2 * r)
        if any(not c or c in (a, b) for c in branches):
            continue
        for c in branches:
            triple = make_tuple(spec, (a, b, c))
            found[triple.key()] = triple
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class FactorCase:
    """One factorization (a - b - z)(a - b + z) = 3 of a double-regular quadruple {a, b, c, d} with cd + 1 = z^2."""

    factors: Tuple[RingElem, RingElem]
    difference: RingElem
    z: RingElem
    cd: RingElem
    max_abs_sq_c: int
    excluded: Optional[str]
    quadruples: Tuple[Tuple[RingElem, RingElem, RingElem, RingElem], ...]
    diophantine: Tuple[DiophTuple, ...]


def _halve(w: RingElem) -> Optional[RingElem]:
    return try_divide(w, from_int(w.spec, 2))


def _factor_quadruples(difference: RingElem, cd: RingElem, min_abs_sq: int, max_abs_sq_c: int):
    """(a, b, c, d) with a - b and cd fixed, c + d = 2(a + b), and min_abs_sq <= |a|^2, |b|^2 <= |c|^2 <= |d|^2."""
    spec = cd.spec
    if max_abs_sq_c < min_abs_sq:
        return
    for c in enumerate_up_to(spec, max_abs_sq_c):
        if abs_sq(c) < min_abs_sq:
            continue
        d = try_divide(cd, c)
        if d is None or abs_sq(d) < abs_sq(c):
            continue
        total = _halve(c + d)
        if total is None:
            continue
        a, b = _halve(total + difference), _halve(total - difference)
        if a is None or b is None or c in (a, b) or d in (a, b):
            continue
        if min(abs_sq(a), abs_sq(b)) < min_abs_sq or max(abs_sq(a), abs_sq(b)) > abs_sq(c):
            continue
        if forbidden_double_regular(a, b, c, d):
            yield a, b, c, d


def double_regular_factor_cases(spec: RingSpec, min_abs_sq: int = 4) -> List[FactorCase]:
    """
    Exhaustive case analysis behind the double-regular pairing.

    If c = a + b - 2r and d = a + b + 2r then cd + 1 = (a - b)^2 - 3, so a square z^2 = cd + 1 splits 3 as
    (a - b - z)(a - b + z). Every factorization 3 = gh in O_K fixes a - b = (g + h) / 2 and z = (h - g) / 2, hence cd,
    and |c|^2 <= |cd| bounds the smaller of c and d. The remaining quadruples with every abs_sq >= min_abs_sq are
    enumerated and checked; a Diophantine one would be a counterexample.
    """
    if min_abs_sq < 1:
        raise ValueError(f"min_abs_sq must be at least 1, got {min_abs_sq}")
    three = from_int(spec, 3)
    cases = []
    for g in enumerate_up_to(spec, 9):
        h = try_divide(three, g)
        if h is None:
            continue
        difference, z = _halve(g + h), _halve(h - g)
        if difference is None or z is None:
            continue
        cd = z * z - 1
        excluded = "a = b" if not difference else "cd = 0" if not cd else None
        max_abs_sq_c = 0 if excluded else math.isqrt(abs_sq(cd))
        quadruples = () if excluded else tuple(_factor_quadruples(difference, cd, min_abs_sq, max_abs_sq_c))
        diophantine = []
        for quadruple in quadruples:
            try:
                diophantine.append(make_tuple(spec, quadruple))
            except TupleError:
                continue
        if diophantine:
            logger.error(f"Double-regular quadruple {diophantine[0]} is Diophantine")
        cases.append(
            FactorCase(
                factors=(g, h),
                difference=difference,
                z=z,
                cd=cd,
                max_abs_sq_c=max_abs_sq_c,
                excluded=excluded,
                quadruples=quadruples,
                diophantine=tuple(diophantine),
            )
        )
    logger.debug(f"{len(cases)} factorizations of 3 with integral a - b and z in {spec}")
    return cases
