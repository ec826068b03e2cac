from dataclasses import dataclass, field
from functools import lru_cache

from sympy import factorint

from .ring_errors import NotSquarefree


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    if n <= 0:
        return False
    return all(exponent == 1 for exponent in factorint(n).values())


@dataclass(frozen=True)
class RingSpec:
    """
    The ring of integers of Q(sqrt(d)) for a negative squarefree d.

    Elements are written u + v*w over the basis (1, w), where w = sqrt(d) when d = 2, 3 (mod 4)
    and w = (-1 + sqrt(d)) / 2 when d = 1 (mod 4); `half_basis` records the second case.
    """

    d: int
    half_basis: bool = field(init=False)

    def __post_init__(self):
        if self.d >= 0 or not is_squarefree(-self.d):
            raise NotSquarefree(self.d)
        object.__setattr__(self, "half_basis", self.d % 4 == 1)

    @property
    def omega_abs_sq(self) -> int:
        """|w|^2, the constant term of the norm form."""
        return (1 - self.d) // 4 if self.half_basis else -self.d

    @property
    def omega_square_constant(self) -> int:
        """w^2 = -w + (d - 1) / 4 in the half basis, w^2 = d otherwise."""
        return (self.d - 1) // 4 if self.half_basis else self.d

    def __str__(self) -> str:
        return f"O_K, K = Q(sqrt({self.d}))"
