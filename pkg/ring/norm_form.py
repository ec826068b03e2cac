"""
Enumeration of ring elements by their squared absolute value.

The norm form is positive definite, so every level set abs_sq(z) = n is finite and is found exactly:
bound |v| from the form, then solve the remaining quadratic in u with integer square roots.
"""

import math
from typing import Iterator, List

from .ring_elem import RingElem, abs_sq_coords, canonical_key
from .ring_spec import RingSpec


def elements_with_abs_sq(spec: RingSpec, n: int) -> List[RingElem]:
    if n < 0:
        return []
    if n == 0:
        return [RingElem(0, 0, spec)]
    # half basis: (2u - v)^2 + |d| v^2 = 4n, otherwise u^2 + |d| v^2 = n
    target = 4 * n if spec.half_basis else n
    v_bound = math.isqrt(target // -spec.d)
    found = set()
    for v in range(-v_bound, v_bound + 1):
        rest = target + spec.d * v * v
        root = math.isqrt(rest)
        if root * root != rest:
            continue
        for w in (root, -root):
            if spec.half_basis:
                if (w + v) % 2:
                    continue
                found.add(RingElem((w + v) // 2, v, spec))
            else:
                found.add(RingElem(w, v, spec))
    return sorted(found, key=lambda z: (z.u, z.v))


def iter_box(spec: RingSpec, bound_sq: int) -> Iterator[RingElem]:
    """Every nonzero z with abs_sq(z) <= bound_sq, in no particular order."""
    target = 4 * bound_sq if spec.half_basis else bound_sq
    v_bound = math.isqrt(target // -spec.d)
    for v in range(-v_bound, v_bound + 1):
        rest = target + spec.d * v * v
        root = math.isqrt(rest)
        if spec.half_basis:
            u_low, u_high = (v - root) // 2 - 1, (v + root) // 2 + 1
        else:
            u_low, u_high = -root, root
        for u in range(u_low, u_high + 1):
            if (u or v) and abs_sq_coords(spec, u, v) <= bound_sq:
                yield RingElem(u, v, spec)


def enumerate_up_to(spec: RingSpec, bound_sq: int) -> Iterator[RingElem]:
    """Every nonzero z with abs_sq(z) <= bound_sq exactly once, in canonical (abs_sq, u, v) order."""
    if bound_sq < 1:
        raise ValueError(f"bound_sq must be at least 1, got {bound_sq}")
    yield from sorted(iter_box(spec, bound_sq), key=canonical_key)
