"""
Orbits of the first Pell-type equation a z^2 - c x^2 = a - c under the automorph s + sqrt(ac).

Composition maps a solution (z, x) to (sz + cx, sx + az) and back to (sz - cx, sx - az); since s^2 - ac = 1 both
maps preserve the form value. Only the first equation's orbit is walked; the second equation filters.
"""

import logging
from enum import Enum
from typing import List, Tuple

from ring import RingElem, abs_sq, canonical_key, enumerate_up_to, sqrt_in_ring, try_divide, zero
from tuples import canonical_witness, make_tuple

from .pell_errors import NotASolution, OrbitNotDiverging
from .pell_system import PellSystem

logger = logging.getLogger(__name__)

ORBIT_STALL_LIMIT = 20

Pair = Tuple[RingElem, RingElem]


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


def compose_step(system: PellSystem, solution: Pair, direction: Direction) -> Pair:
    z, x = solution
    if not system.solves_first(z, x):
        raise NotASolution(f"({z}, {x}) does not solve a z^2 - c x^2 = a - c")
    s, a, c = system.s, system.a, system.c
    if direction == Direction.FORWARD:
        return s * z + c * x, s * x + a * z
    return s * z - c * x, s * x - a * z


def _walk(system: PellSystem, seed: Pair, direction: Direction, max_abs_sq: int) -> List[Pair]:
    members = []
    current = seed
    previous = best = abs_sq(seed[0])
    stalled = 0
    while True:
        current = compose_step(system, current, direction)
        size = abs_sq(current[0])
        if size > best:
            best, stalled = size, 0
            if size > max_abs_sq and size > previous:
                return members
        elif size >= previous:
            # neither a new record nor still descending toward the orbit minimum
            stalled += 1
            if stalled >= ORBIT_STALL_LIMIT:
                raise OrbitNotDiverging(stalled)
        if size <= max_abs_sq:
            members.append(current)
        previous = size


def orbit(system: PellSystem, seed: Pair, max_abs_sq: int) -> List[Pair]:
    """Orbit members (z, x) with abs_sq(z) <= max_abs_sq, walking both directions from the seed."""
    if not system.solves_first(*seed):
        raise NotASolution(f"seed ({seed[0]}, {seed[1]}) does not solve a z^2 - c x^2 = a - c")
    backward = _walk(system, seed, Direction.BACKWARD, max_abs_sq)
    forward = _walk(system, seed, Direction.FORWARD, max_abs_sq)
    members = list(reversed(backward))
    if abs_sq(seed[0]) <= max_abs_sq:
        members.append(seed)
    return members + forward


def reduce_to_seed(system: PellSystem, solution: Pair) -> Pair:
    """Step in whichever direction shrinks abs_sq(z) until neither does; returns a minimal orbit representative."""
    current = solution
    size = abs_sq(current[0])
    while True:
        steps = [compose_step(system, current, direction) for direction in Direction]
        best = min(steps, key=lambda pair: abs_sq(pair[0]))
        if abs_sq(best[0]) >= size:
            return current
        current, size = best, abs_sq(best[0])


def first_equation_seeds(system: PellSystem, seed_bound: int) -> List[Pair]:
    """Distinct reduced seeds among solutions (z, x) of the first equation with abs_sq(z) <= seed_bound."""
    a, c = system.a, system.c
    seeds = {}
    for z in [zero(a.spec), *enumerate_up_to(a.spec, seed_bound)]:
        x_sq = try_divide(a * z * z - a + c, c)
        if x_sq is None:
            continue
        for x in sqrt_in_ring(x_sq):
            seed = reduce_to_seed(system, (z, x))
            seeds[(canonical_key(seed[0]), canonical_key(seed[1]))] = seed
    return [seeds[key] for key in sorted(seeds)]


def extensions_from_orbit(system: PellSystem, seed: Pair, max_abs_sq: int) -> List[RingElem]:
    """Fourth elements d = (z^2 - 1) / c realized by orbit members that also solve the second equation."""
    a, b, c = system.a, system.b, system.c
    found = {}
    for z, _ in orbit(system, seed, max_abs_sq):
        d = try_divide(z * z - 1, c)
        if d is None or not d or d in (a, b, c):
            continue
        if canonical_witness(b * d + 1) is None or canonical_witness(a * d + 1) is None:
            continue
        make_tuple(a.spec, (a, b, c, d))
        found[canonical_key(d)] = d
    logger.debug(f"Orbit walk from seed ({seed[0]}, {seed[1]}) produced {len(found)} extensions")
    return [found[key] for key in sorted(found)]
