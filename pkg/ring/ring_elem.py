from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .ring_errors import MixedRings, NotInRing
from .ring_spec import RingSpec


@dataclass(frozen=True)
class RingElem:
    """
    An element u + v*w of O_K with exact integer coordinates.

    Arithmetic operators accept plain ints on either side; ints are read as rational integers of the same ring.
    """

    u: int
    v: int
    spec: RingSpec

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            return other
        if isinstance(other, int):
            return RingElem(other, 0, self.spec)
        return NotImplemented

    def __add__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self) -> "RingElem":
        return neg(self)

    def __mul__(self, other: Union["RingElem", int]) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElem":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only non-negative integer powers are supported, got {exponent}")
        result = RingElem(1, 0, self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            base = mul(base, base)
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return self.u != 0 or self.v != 0

    def __str__(self) -> str:
        return describe(self)

    def coords(self) -> Tuple[int, int]:
        return (self.u, self.v)


def _check_same_ring(z1: RingElem, z2: RingElem):
    if z1.spec != z2.spec:
        raise MixedRings(z1.spec.d, z2.spec.d)


def from_int(spec: RingSpec, n: int) -> RingElem:
    return RingElem(n, 0, spec)


def zero(spec: RingSpec) -> RingElem:
    return RingElem(0, 0, spec)


def add(z1: RingElem, z2: RingElem) -> RingElem:
    _check_same_ring(z1, z2)
    return RingElem(z1.u + z2.u, z1.v + z2.v, z1.spec)


def sub(z1: RingElem, z2: RingElem) -> RingElem:
    _check_same_ring(z1, z2)
    return RingElem(z1.u - z2.u, z1.v - z2.v, z1.spec)


def neg(z: RingElem) -> RingElem:
    return RingElem(-z.u, -z.v, z.spec)


def mul_coords(spec: RingSpec, u1: int, v1: int, u2: int, v2: int) -> Tuple[int, int]:
    """Product of coordinate pairs, used directly by the hot loops of the searches."""
    vv = v1 * v2
    if spec.half_basis:
        return (u1 * u2 + vv * spec.omega_square_constant, u1 * v2 + u2 * v1 - vv)
    return (u1 * u2 + vv * spec.d, u1 * v2 + u2 * v1)


def mul(z1: RingElem, z2: RingElem) -> RingElem:
    _check_same_ring(z1, z2)
    u, v = mul_coords(z1.spec, z1.u, z1.v, z2.u, z2.v)
    return RingElem(u, v, z1.spec)


def abs_sq_coords(spec: RingSpec, u: int, v: int) -> int:
    if spec.half_basis:
        return u * u - u * v + spec.omega_abs_sq * v * v
    return u * u - spec.d * v * v


def abs_sq(z: RingElem) -> int:
    """|z|^2, which for an imaginary quadratic field is the field norm of z."""
    return abs_sq_coords(z.spec, z.u, z.v)


def canonical_key(z: RingElem) -> Tuple[int, int, int]:
    return (abs_sq(z), z.u, z.v)


def cmp_abs(z1: RingElem, z2: RingElem) -> int:
    _check_same_ring(z1, z2)
    left, right = abs_sq(z1), abs_sq(z2)
    return (left > right) - (left < right)


def conj(z: RingElem) -> RingElem:
    if z.spec.half_basis:
        return RingElem(z.u - z.v, -z.v, z.spec)
    return RingElem(z.u, -z.v, z.spec)


def is_unit(z: RingElem) -> bool:
    return abs_sq(z) == 1


def try_divide(w: RingElem, c: RingElem) -> Optional[RingElem]:
    """w / c when c divides w in O_K, else None."""
    _check_same_ring(w, c)
    n = abs_sq(c)
    if n == 0:
        raise ZeroDivisionError("division by zero ring element")
    u, v = mul_coords(w.spec, w.u, w.v, *conj(c).coords())
    if u % n or v % n:
        return None
    return RingElem(u // n, v // n, w.spec)


def divide_exact(w: RingElem, c: RingElem) -> RingElem:
    quotient = try_divide(w, c)
    if quotient is None:
        raise NotInRing(f"{describe(c)} does not divide {describe(w)} in {w.spec}")
    return quotient


def describe(z: RingElem) -> str:
    """Render z in terms of sqrt(d), e.g. (3, 2) in d = -3 becomes '2+√-3'."""
    spec = z.spec
    if spec.half_basis:
        real, imag = Fraction(2 * z.u - z.v, 2), Fraction(z.v, 2)
    else:
        real, imag = Fraction(z.u), Fraction(z.v)
    if imag == 0:
        return str(real)
    root = f"√{spec.d}"
    if imag == 1:
        imag_part = root
    elif imag == -1:
        imag_part = f"-{root}"
    else:
        imag_part = f"{imag}{root}"
    if real == 0:
        return imag_part
    return f"{real}{'+' if imag > 0 else ''}{imag_part}"
