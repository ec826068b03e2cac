from .norm_form import elements_with_abs_sq, enumerate_up_to, iter_box
from .ring_elem import (
    RingElem,
    abs_sq,
    abs_sq_coords,
    add,
    canonical_key,
    cmp_abs,
    conj,
    describe,
    divide_exact,
    from_int,
    is_unit,
    mul,
    mul_coords,
    neg,
    sub,
    try_divide,
    zero,
)
from .ring_errors import MixedRings, NotInRing, NotSquarefree
from .ring_spec import RingSpec, is_squarefree
from .square_roots import is_square, sqrt_in_ring

__all__ = [
    "RingSpec",
    "RingElem",
    "MixedRings",
    "NotInRing",
    "NotSquarefree",
    "abs_sq",
    "abs_sq_coords",
    "add",
    "canonical_key",
    "cmp_abs",
    "conj",
    "describe",
    "divide_exact",
    "elements_with_abs_sq",
    "enumerate_up_to",
    "from_int",
    "is_square",
    "is_squarefree",
    "is_unit",
    "iter_box",
    "mul",
    "mul_coords",
    "neg",
    "sqrt_in_ring",
    "sub",
    "try_divide",
    "zero",
]
