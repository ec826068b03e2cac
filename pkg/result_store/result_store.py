from typing import List, Optional

from ring import RingSpec
from tuples import DiophTuple


class ResultStore:
    def load(self, spec: RingSpec, bound_sq: int, m: int) -> Optional[List[DiophTuple]]:
        raise NotImplementedError()

    def save(self, spec: RingSpec, bound_sq: int, m: int, tuples: List[DiophTuple]):
        raise NotImplementedError()

    def discard(self, spec: RingSpec, bound_sq: int, m: int):
        raise NotImplementedError()
