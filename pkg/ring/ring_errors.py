# Errors raised by exact arithmetic in imaginary quadratic rings of integers.


class MixedRings(ValueError):
    def __init__(self, left_d: int, right_d: int):
        super().__init__(f"Elements belong to different rings: d={left_d} and d={right_d}")
        self.left_d = left_d
        self.right_d = right_d


class NotSquarefree(ValueError):
    def __init__(self, d: int):
        super().__init__(f"d must be a negative squarefree integer, got {d}")
        self.d = d


class NotInRing(ValueError):
    """Raised when an exact quotient does not lie in the ring of integers."""
