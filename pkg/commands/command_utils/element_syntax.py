"""
Command-line element syntax: "u,v" coordinate pairs over the ring's (1, w) basis, joined by ";". Rational integers are
written "n,0". The same syntax is printed back in reports so any printed tuple can be passed to --elems.
"""

import argparse
from typing import Iterable, List, Tuple

from ring import RingElem, RingSpec


class UsageError(ValueError):
    pass


def ring_spec(text: str) -> RingSpec:
    try:
        return RingSpec(int(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"--d must be a negative squarefree integer: {e}")


def coordinates(text: str) -> List[Tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        parts = chunk.strip().split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"Expected 'u,v' but got '{chunk.strip()}'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(f"Coordinates must be integers: '{chunk.strip()}'")
    return pairs


def elements(spec: RingSpec, pairs: Iterable[Tuple[int, int]]) -> List[RingElem]:
    return [RingElem(u, v, spec) for u, v in pairs]


def format_elements(elems: Iterable[RingElem]) -> str:
    return ";".join(f"{e.u},{e.v}" for e in elems)
