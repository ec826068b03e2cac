import random

import pytest

from pell import (
    Direction,
    NotASolution,
    build_system,
    compose_step,
    extensions_from_orbit,
    first_equation_seeds,
    orbit,
    reduce_to_seed,
    solution_from_extension,
)
from ring import RingElem, RingSpec, abs_sq
from search import find_m_tuples, search_config_for
from tuples import NotAQuadruple, NotATriple, make_tuple
from tests.strategies import SMALL_RINGS

RATIONAL_TRIPLES = [(1, 3, 8), (2, 4, 12), (1, 8, 120), (3, 8, 120), (1, 3, 120)]


@pytest.fixture
def system(gaussian, integers):
    return build_system(*integers(gaussian, 1, 3, 8))


def pair(spec, z, x):
    return RingElem(z, 0, spec), RingElem(x, 0, spec)


def z_values(members):
    return [z.u for z, _ in members]


class TestPellSystem:
    def test_build_system(self, system, gaussian):
        assert (system.s, system.t) == (RingElem(3, 0, gaussian), RingElem(5, 0, gaussian))

    def test_build_system_sorts(self, gaussian, integers):
        assert build_system(*integers(gaussian, 8, 1, 3)) == build_system(*integers(gaussian, 1, 3, 8))

    def test_eisenstein_system(self, eisenstein):
        a, b, c = RingElem(-2, 0, eisenstein), RingElem(2, 0, eisenstein), RingElem(2, 4, eisenstein)
        system = build_system(a, b, c)
        assert system.s * system.s == system.a * system.c + 1
        assert system.t * system.t == system.b * system.c + 1

    def test_not_a_triple(self, gaussian, integers):
        with pytest.raises(NotATriple):
            build_system(*integers(gaussian, 1, 3, 7))

    def test_solution_from_extension(self, system, gaussian):
        solution = solution_from_extension(system, RingElem(120, 0, gaussian))
        assert (solution.x.u, solution.y.u, solution.z.u) == (11, 19, 31)
        assert system.first_form(solution.z, solution.x) == RingElem(-7, 0, gaussian)

    def test_solution_needs_a_quadruple(self, system, gaussian):
        with pytest.raises(NotAQuadruple):
            solution_from_extension(system, RingElem(0, 0, gaussian))
        with pytest.raises(NotAQuadruple):
            solution_from_extension(system, RingElem(15, 0, gaussian))


class TestOrbit:
    def test_compose_forward(self, system, gaussian):
        assert compose_step(system, pair(gaussian, 1, 1), Direction.FORWARD) == pair(gaussian, 11, 4)
        assert compose_step(system, pair(gaussian, 11, 4), Direction.FORWARD) == pair(gaussian, 65, 23)

    def test_backward_inverts_forward(self, system, gaussian):
        start = pair(gaussian, 11, 4)
        forward = compose_step(system, start, Direction.FORWARD)
        assert compose_step(system, forward, Direction.BACKWARD) == start

    def test_compose_rejects_non_solutions(self, system, gaussian):
        with pytest.raises(NotASolution):
            compose_step(system, pair(gaussian, 2, 1), Direction.FORWARD)
        with pytest.raises(NotASolution):
            orbit(system, pair(gaussian, 2, 1), 100)

    def test_orbit_members(self, system, gaussian):
        members = orbit(system, pair(gaussian, 1, 1), 10**7)
        assert z_values(members) == [-1055, -181, -31, -5, 1, 11, 65, 379, 2209]
        assert all(system.solves_first(z, x) for z, x in members)

    def test_reduce_to_seed(self, system, gaussian):
        assert reduce_to_seed(system, pair(gaussian, 31, 11)) == pair(gaussian, -1, 1)

    def test_extensions_from_orbit(self, system, gaussian):
        assert extensions_from_orbit(system, pair(gaussian, 1, 1), 10**6) == [RingElem(120, 0, gaussian)]
        assert extensions_from_orbit(system, pair(gaussian, 1, 1), 100) == []

    def test_seeds_are_reduced_and_reach_120(self, system, gaussian):
        seeds = first_equation_seeds(system, abs_sq(system.c))
        assert seeds
        assert all(reduce_to_seed(system, seed) == seed for seed in seeds)
        found = {e for seed in seeds for e in extensions_from_orbit(system, seed, 10**6)}
        assert RingElem(120, 0, gaussian) in found

    def test_seeded_steps_preserve_the_form(self):
        rng = random.Random(43)
        triples = {}
        for d in SMALL_RINGS:
            spec = RingSpec(d)
            rational = [make_tuple(spec, [RingElem(n, 0, spec) for n in ns]) for ns in RATIONAL_TRIPLES]
            triples[d] = rational + find_m_tuples(search_config_for(spec, 4, 3)).tuples
        steps = 0
        while steps < 1_000:
            spec = RingSpec(rng.choice(SMALL_RINGS))
            system = build_system(*rng.choice(triples[spec.d]).elems)
            # (1, 1) solves a z^2 - c x^2 = a - c for every triple
            current = (RingElem(1, 0, spec), RingElem(1, 0, spec))
            value = system.first_form(*current)
            for _ in range(25):
                current = compose_step(system, current, rng.choice(list(Direction)))
                assert system.first_form(*current) == value
                steps += 1


class TestQuadrupleOrbits:
    @pytest.mark.parametrize("values", [(1, 3, 8, 120), (2, 4, 12, 420), (1, 3, 120, 1680)])
    def test_quadruple_reaches_a_small_seed(self, gaussian, integers, values):
        *triple, d = integers(gaussian, *values)
        system = build_system(*triple)
        solution = solution_from_extension(system, d)
        seed = reduce_to_seed(system, (solution.z, solution.x))
        assert abs_sq(seed[0]) <= abs_sq(solution.z)
        assert d in extensions_from_orbit(system, seed, abs_sq(solution.z))


@pytest.fixture(scope="module")
def searched_quadruples():
    quadruples = []
    for d in SMALL_RINGS:
        quadruples.extend(find_m_tuples(search_config_for(RingSpec(d), 12, 4)).tuples)
    return quadruples


class TestSearchedQuadrupleOrbits:
    def test_every_member_is_an_orbit_extension(self, searched_quadruples):
        assert searched_quadruples
        for quadruple in searched_quadruples:
            for i, d in enumerate(quadruple.elems):
                triple = [e for j, e in enumerate(quadruple.elems) if j != i]
                system = build_system(*triple)
                solution = solution_from_extension(system, d)
                seed = reduce_to_seed(system, (solution.z, solution.x))
                assert abs_sq(seed[0]) <= abs_sq(solution.z), quadruple
                assert d in extensions_from_orbit(system, seed, abs_sq(solution.z)), (quadruple, i)
