import math
from typing import Tuple

from .norm_form import elements_with_abs_sq
from .ring_elem import RingElem, abs_sq, mul


def sqrt_in_ring(w: RingElem) -> Tuple[RingElem, ...]:
    """
    All z in O_K with z * z == w, in canonical order.

    abs_sq is multiplicative, so a square root of w has abs_sq equal to isqrt(abs_sq(w)); the candidates on that
    level set are filtered by exact squaring. The result is empty, a single zero, or a pair {z, -z}.
    """
    n = abs_sq(w)
    if n == 0:
        return (RingElem(0, 0, w.spec),)
    m = math.isqrt(n)
    if m * m != n:
        return ()
    return tuple(z for z in elements_with_abs_sq(w.spec, m) if mul(z, z) == w)


def is_square(w: RingElem) -> bool:
    return bool(sqrt_in_ring(w))
