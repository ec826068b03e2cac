from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

from ring import MixedRings, RingElem, RingSpec, canonical_key, describe, sqrt_in_ring

from .tuple_errors import DuplicateElement, EqualElements, NotDiophantine, TupleError, ZeroElement


@dataclass(frozen=True)
class DiophTuple:
    """
    A verified Diophantine m-tuple: distinct nonzero elements sorted by (abs_sq, u, v), with
    witnesses[(i, j)] ** 2 == elems[i] * elems[j] + 1 for every i < j.
    """

    spec: RingSpec
    elems: Tuple[RingElem, ...]
    witnesses: Dict[Tuple[int, int], RingElem] = field(hash=False)

    @property
    def size(self) -> int:
        return len(self.elems)

    def witness(self, i: int, j: int) -> RingElem:
        return self.witnesses[(min(i, j), max(i, j))]

    def key(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(canonical_key(e) for e in self.elems)

    def __str__(self) -> str:
        return "{" + ", ".join(describe(e) for e in self.elems) + "}"


def canonical_witness(w: RingElem) -> Optional[RingElem]:
    """The square root of w that is maximal in canonical order, or None when w is not a square."""
    roots = sqrt_in_ring(w)
    if not roots:
        return None
    return max(roots, key=canonical_key)


def is_diophantine_pair(a: RingElem, b: RingElem) -> Optional[RingElem]:
    if a.spec != b.spec:
        raise MixedRings(a.spec.d, b.spec.d)
    if not a or not b:
        raise ZeroElement()
    if a == b:
        raise EqualElements()
    return canonical_witness(a * b + 1)


def make_tuple(spec: RingSpec, elems: Iterable[RingElem]) -> DiophTuple:
    ordered = list(elems)
    if not ordered:
        raise TupleError("A Diophantine tuple needs at least one element")
    for e in ordered:
        if e.spec != spec:
            raise MixedRings(spec.d, e.spec.d)
        if not e:
            raise ZeroElement()
    ordered.sort(key=canonical_key)
    for left, right in zip(ordered, ordered[1:]):
        if left == right:
            raise DuplicateElement(describe(left))

    witnesses = {}
    for i, j in combinations(range(len(ordered)), 2):
        product_plus_one = ordered[i] * ordered[j] + 1
        root = canonical_witness(product_plus_one)
        if root is None:
            raise NotDiophantine((i, j), describe(product_plus_one))
        witnesses[(i, j)] = root
    return DiophTuple(spec=spec, elems=tuple(ordered), witnesses=witnesses)


def check_witnesses(t: DiophTuple) -> bool:
    """Re-check stored witnesses (e.g. ones read back from a cache) against the definition."""
    pairs = set(combinations(range(t.size), 2))
    if set(t.witnesses) != pairs:
        return False
    return all(t.witnesses[(i, j)] * t.witnesses[(i, j)] == t.elems[i] * t.elems[j] + 1 for i, j in pairs)
