from dataclasses import dataclass

from ring import RingElem, describe
from tuples import TupleError, canonical_witness, make_tuple
from tuples.tuple_errors import NotAQuadruple, NotATriple


@dataclass(frozen=True)
class PellSystem:
    """
    The system a z^2 - c x^2 = a - c, b z^2 - c y^2 = b - c obtained by eliminating the fourth element d from
    ad + 1 = x^2, bd + 1 = y^2, cd + 1 = z^2. s^2 = ac + 1 and t^2 = bc + 1.
    """

    a: RingElem
    b: RingElem
    c: RingElem
    s: RingElem
    t: RingElem

    def first_form(self, z: RingElem, x: RingElem) -> RingElem:
        return self.a * z * z - self.c * x * x

    def second_form(self, z: RingElem, y: RingElem) -> RingElem:
        return self.b * z * z - self.c * y * y

    def solves_first(self, z: RingElem, x: RingElem) -> bool:
        return self.first_form(z, x) == self.a - self.c

    def solves_second(self, z: RingElem, y: RingElem) -> bool:
        return self.second_form(z, y) == self.b - self.c


@dataclass(frozen=True)
class PellSolution:
    x: RingElem
    y: RingElem
    z: RingElem


def build_system(a: RingElem, b: RingElem, c: RingElem) -> PellSystem:
    try:
        triple = make_tuple(a.spec, (a, b, c))
    except TupleError as e:
        raise NotATriple(f"{{{describe(a)}, {describe(b)}, {describe(c)}}} is not a Diophantine triple: {e}") from e
    a, b, c = triple.elems
    return PellSystem(a=a, b=b, c=c, s=triple.witness(0, 2), t=triple.witness(1, 2))


def solution_from_extension(system: PellSystem, d: RingElem) -> PellSolution:
    a, b, c = system.a, system.b, system.c
    try:
        make_tuple(a.spec, (a, b, c, d))
    except TupleError as e:
        raise NotAQuadruple(f"{describe(d)} does not extend the triple: {e}") from e
    solution = PellSolution(
        x=canonical_witness(a * d + 1),
        y=canonical_witness(b * d + 1),
        z=canonical_witness(c * d + 1),
    )
    if not (system.solves_first(solution.z, solution.x) and system.solves_second(solution.z, solution.y)):
        raise ArithmeticError(f"Pell identities failed for extension {describe(d)}")
    return solution
