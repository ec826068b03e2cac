from typing import List, TypedDict

from ring import RingElem, RingSpec
from tuples import DiophTuple


class CachedTuple(TypedDict):
    d: int
    elems: List[List[int]]
    witnesses: List[list]


def to_record(t: DiophTuple) -> CachedTuple:
    return CachedTuple(
        d=t.spec.d,
        elems=[[e.u, e.v] for e in t.elems],
        witnesses=[[i, j, [r.u, r.v]] for (i, j), r in sorted(t.witnesses.items())],
    )


def from_record(record: CachedTuple) -> DiophTuple:
    """Rebuild a tuple exactly as stored; callers re-verify it before use."""
    spec = RingSpec(record["d"])
    elems = tuple(RingElem(u, v, spec) for u, v in record["elems"])
    witnesses = {(i, j): RingElem(u, v, spec) for i, j, (u, v) in record["witnesses"]}
    return DiophTuple(spec=spec, elems=elems, witnesses=witnesses)
