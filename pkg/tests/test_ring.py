import random

import pytest
from hypothesis import given

from ring import (
    MixedRings,
    NotInRing,
    NotSquarefree,
    RingElem,
    RingSpec,
    abs_sq,
    canonical_key,
    cmp_abs,
    conj,
    describe,
    divide_exact,
    elements_with_abs_sq,
    enumerate_up_to,
    from_int,
    is_square,
    is_unit,
    mul,
    sqrt_in_ring,
    try_divide,
)
from tests.strategies import SMALL_RINGS, element_pairs, elements, specs


def coords(elems):
    return {e.coords() for e in elems}


class TestRingSpec:
    @pytest.mark.parametrize("d, half", [(-1, False), (-2, False), (-3, True), (-7, True), (-163, True), (-5, False)])
    def test_half_basis(self, d, half):
        assert RingSpec(d).half_basis is half

    @pytest.mark.parametrize("d", [-4, -12, 0, 3, -18])
    def test_rejects_non_squarefree_or_positive(self, d):
        with pytest.raises(NotSquarefree):
            RingSpec(d)

    def test_omega_constants(self):
        assert RingSpec(-3).omega_abs_sq == 1
        assert RingSpec(-163).omega_abs_sq == 41
        assert RingSpec(-2).omega_abs_sq == 2


class TestArithmetic:
    def test_add_sub_neg(self, eisenstein):
        assert RingElem(1, 0, eisenstein) + RingElem(0, 1, eisenstein) == RingElem(1, 1, eisenstein)
        assert RingElem(5, 8, eisenstein) - RingElem(3, 2, eisenstein) == RingElem(2, 6, eisenstein)
        z = RingElem(4, -7, eisenstein)
        assert not (z + -z)

    def test_mul_examples(self, gaussian, eisenstein):
        assert mul(RingElem(0, 1, eisenstein), RingElem(0, 1, eisenstein)) == RingElem(-1, -1, eisenstein)
        assert RingElem(1, 1, gaussian) * RingElem(1, 1, gaussian) == RingElem(0, 2, gaussian)
        assert RingElem(3, 2, eisenstein) ** 2 == RingElem(5, 8, eisenstein)

    def test_int_operands(self, gaussian):
        z = RingElem(2, 3, gaussian)
        assert z + 1 == RingElem(3, 3, gaussian)
        assert 1 - z == RingElem(-1, -3, gaussian)
        assert 2 * z == RingElem(4, 6, gaussian)
        assert from_int(gaussian, 7) == RingElem(7, 0, gaussian)

    def test_mixed_rings(self, gaussian, eisenstein):
        with pytest.raises(MixedRings):
            RingElem(1, 0, gaussian) + RingElem(1, 0, eisenstein)
        with pytest.raises(MixedRings):
            cmp_abs(RingElem(1, 0, gaussian), RingElem(1, 0, eisenstein))

    def test_negative_power_rejected(self, gaussian):
        with pytest.raises(ValueError):
            RingElem(1, 1, gaussian) ** -1

    def test_abs_sq_examples(self, gaussian, eisenstein):
        assert abs_sq(RingElem(0, 1, eisenstein)) == 1
        assert abs_sq(RingElem(2, 4, eisenstein)) == 12
        assert abs_sq(RingElem(3, 4, gaussian)) == 25

    def test_cmp_abs(self, gaussian, eisenstein):
        assert cmp_abs(RingElem(1, 1, gaussian), RingElem(2, 0, gaussian)) == -1
        z = RingElem(5, -2, gaussian)
        assert cmp_abs(z, z) == 0
        assert cmp_abs(RingElem(2, 4, eisenstein), RingElem(3, 0, eisenstein)) == 1

    def test_conj(self, gaussian, eisenstein):
        assert conj(RingElem(2, 3, gaussian)) == RingElem(2, -3, gaussian)
        assert conj(RingElem(0, 1, eisenstein)) == RingElem(-1, -1, eisenstein)
        z = RingElem(7, 5, eisenstein)
        assert z * conj(z) == RingElem(abs_sq(z), 0, eisenstein)

    def test_units(self, gaussian, eisenstein):
        assert is_unit(RingElem(0, 1, gaussian))
        assert is_unit(RingElem(1, 1, eisenstein))
        assert not is_unit(RingElem(2, 0, gaussian))

    def test_division(self, gaussian):
        assert divide_exact(RingElem(0, 2, gaussian), RingElem(1, 1, gaussian)) == RingElem(1, 1, gaussian)
        assert try_divide(RingElem(1, 0, gaussian), RingElem(2, 0, gaussian)) is None
        with pytest.raises(NotInRing):
            divide_exact(RingElem(1, 0, gaussian), RingElem(2, 0, gaussian))
        with pytest.raises(ZeroDivisionError):
            try_divide(RingElem(1, 0, gaussian), RingElem(0, 0, gaussian))

    def test_describe(self, gaussian, eisenstein):
        assert describe(RingElem(3, 2, eisenstein)) == "2+√-3"
        assert describe(RingElem(2, 4, eisenstein)) == "2√-3"
        assert describe(RingElem(-2, -4, eisenstein)) == "-2√-3"
        assert describe(RingElem(8, 0, gaussian)) == "8"
        assert describe(RingElem(1, -1, gaussian)) == "1-√-1"
        assert describe(RingElem(0, 1, eisenstein)) == "-1/2+1/2√-3"


class TestAlgebraProperties:
    @given(element_pairs())
    def test_norm_multiplicative(self, pair):
        z, w = pair
        assert abs_sq(z * w) == abs_sq(z) * abs_sq(w)

    @given(element_pairs())
    def test_conj_is_ring_homomorphism(self, pair):
        z, w = pair
        assert conj(conj(z)) == z
        assert conj(z * w) == conj(z) * conj(w)
        assert conj(z + w) == conj(z) + conj(w)

    @given(element_pairs(bound=30))
    def test_sqrt_round_trip(self, pair):
        z, _ = pair
        roots = sqrt_in_ring(z * z)
        assert z in roots
        assert all(r * r == z * z for r in roots)
        assert {(-r).coords() for r in roots} == coords(roots)

    @pytest.mark.parametrize("d", SMALL_RINGS)
    def test_seeded_norm_multiplicativity(self, d):
        spec, rng = RingSpec(d), random.Random(d)
        for _ in range(10_000):
            z = RingElem(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6), spec)
            w = RingElem(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6), spec)
            assert abs_sq(z * w) == abs_sq(z) * abs_sq(w)

    @pytest.mark.parametrize("d", SMALL_RINGS)
    def test_seeded_square_round_trips(self, d):
        spec, rng = RingSpec(d), random.Random(1000 + d)
        for _ in range(1_000):
            z = RingElem(rng.randint(-200, 200), rng.randint(-200, 200), spec)
            assert z in sqrt_in_ring(z * z)


class TestSquareRoots:
    def test_zero(self):
        for d in SMALL_RINGS:
            spec = RingSpec(d)
            assert sqrt_in_ring(RingElem(0, 0, spec)) == (RingElem(0, 0, spec),)

    def test_thirteen_is_not_a_square(self, eisenstein):
        assert sqrt_in_ring(RingElem(13, 0, eisenstein)) == ()
        assert not is_square(RingElem(13, 0, eisenstein))

    def test_square_of_two_plus_root(self, eisenstein):
        assert coords(sqrt_in_ring(RingElem(5, 8, eisenstein))) == {(3, 2), (-3, -2)}

    def test_imaginary_root(self, gaussian):
        # (1 + i)^2 = 2i
        assert coords(sqrt_in_ring(RingElem(0, 2, gaussian))) == {(1, 1), (-1, -1)}


class TestNormForm:
    def test_associates_of_root_minus_three(self, eisenstein):
        assert coords(elements_with_abs_sq(eisenstein, 3)) == {(1, 2), (-1, -2), (2, 1), (-2, -1), (-1, 1), (1, -1)}

    def test_gaussian_norm_two(self, gaussian):
        assert coords(elements_with_abs_sq(gaussian, 2)) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}

    def test_norm_form_omits_three(self):
        assert elements_with_abs_sq(RingSpec(-7), 3) == []

    def test_sorted_by_coordinates(self, eisenstein):
        found = elements_with_abs_sq(eisenstein, 7)
        assert [z.coords() for z in found] == sorted(z.coords() for z in found)

    def test_units(self, gaussian, eisenstein):
        assert coords(enumerate_up_to(gaussian, 1)) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
        assert len(list(enumerate_up_to(eisenstein, 1))) == 6

    def test_large_discriminant_contains_omega(self):
        assert RingElem(0, 1, RingSpec(-163)) in list(enumerate_up_to(RingSpec(-163), 256))

    def test_enumerate_rejects_empty_bound(self, gaussian):
        with pytest.raises(ValueError):
            list(enumerate_up_to(gaussian, 0))

    @given(specs())
    def test_level_sets_cover_the_box(self, spec):
        box = list(enumerate_up_to(spec, 60))
        levels = [z for n in range(1, 61) for z in elements_with_abs_sq(spec, n)]
        assert sorted(levels, key=canonical_key) == box
        assert len(set(box)) == len(box)
        assert all(0 < abs_sq(z) <= 60 for z in box)

    @given(specs().flatmap(lambda spec: elements(spec, 12)))
    def test_every_small_element_enumerated(self, z):
        if z:
            assert z in list(enumerate_up_to(z.spec, max(abs_sq(z), 1)))
