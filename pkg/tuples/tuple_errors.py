# Errors raised while checking Diophantine pairs, triples and tuples.
from typing import Optional, Tuple


class TupleError(ValueError):
    pass


class ZeroElement(TupleError):
    def __init__(self):
        super().__init__("0 is not an element of a Diophantine tuple")


class EqualElements(TupleError):
    def __init__(self):
        super().__init__("A Diophantine pair needs two distinct elements")


class DuplicateElement(TupleError):
    def __init__(self, element: str):
        super().__init__(f"Duplicate element {element}")
        self.element = element


class NotDiophantine(TupleError):
    """The product of the elements at `pair` (indices into the sorted tuple) plus one is not a square."""

    def __init__(self, pair: Tuple[int, int], product_plus_one: Optional[str] = None):
        message = f"Not Diophantine at pair {pair}"
        if product_plus_one is not None:
            message += f": {product_plus_one} is not a square"
        super().__init__(message)
        self.pair = pair


class NotAPair(TupleError):
    pass


class NotATriple(TupleError):
    pass


class NotAQuadruple(TupleError):
    pass
