import random

import pytest

from ring import MixedRings, RingElem, RingSpec, abs_sq, canonical_key
from search import find_m_tuples, search_config_for
from tuples import (
    DuplicateElement,
    EqualElements,
    NotAPair,
    NotATriple,
    NotDiophantine,
    ZeroElement,
    c_plus_minus,
    c_plus_minus_product,
    canonical_witness,
    check_witnesses,
    double_regular_census,
    double_regular_factor_cases,
    forbidden_double_regular,
    is_diophantine_pair,
    is_regular_triple,
    make_tuple,
    products_not_squares,
    quadruple_extension_candidates,
    regular_extensions,
)
from tuples.dioph_tuple import DiophTuple
from tests.strategies import SMALL_RINGS


@pytest.fixture
def root_triples(eisenstein):
    """-2, 2 and the two associates +-2 sqrt(-3) in d = -3."""
    return (
        RingElem(-2, 0, eisenstein),
        RingElem(2, 0, eisenstein),
        RingElem(-2, -4, eisenstein),
        RingElem(2, 4, eisenstein),
    )


def values(elems):
    return [e.u for e in elems]


@pytest.fixture(scope="module")
def found_triples():
    triples = []
    for d in SMALL_RINGS:
        triples.extend(find_m_tuples(search_config_for(RingSpec(d), 5, 3)).tuples)
    return triples


class TestPairs:
    def test_witness(self, gaussian, integers):
        one, three = integers(gaussian, 1, 3)
        assert is_diophantine_pair(one, three) == RingElem(2, 0, gaussian)

    def test_eisenstein_pairs(self, root_triples):
        minus_two, _, minus_root, root = root_triples
        assert is_diophantine_pair(minus_two, root) is not None
        assert is_diophantine_pair(minus_root, root) is None

    def test_errors(self, gaussian, eisenstein, integers):
        one, three = integers(gaussian, 1, 3)
        with pytest.raises(ZeroElement):
            is_diophantine_pair(one, RingElem(0, 0, gaussian))
        with pytest.raises(EqualElements):
            is_diophantine_pair(one, one)
        with pytest.raises(MixedRings):
            is_diophantine_pair(one, RingElem(3, 0, eisenstein))

    def test_canonical_witness_is_maximal(self, gaussian):
        assert canonical_witness(RingElem(0, 2, gaussian)) == RingElem(1, 1, gaussian)
        assert canonical_witness(RingElem(3, 0, gaussian)) is None


class TestMakeTuple:
    def test_classical_quadruple(self, gaussian, integers):
        t = make_tuple(gaussian, integers(gaussian, 120, 3, 8, 1))
        assert values(t.elems) == [1, 3, 8, 120]
        witnesses = [t.witnesses[pair].u for pair in sorted(t.witnesses)]
        assert witnesses == [2, 3, 11, 5, 19, 31]
        assert all(t.witnesses[pair].v == 0 for pair in t.witnesses)
        assert check_witnesses(t)
        assert str(t) == "{1, 3, 8, 120}"

    def test_eisenstein_triple(self, eisenstein, root_triples):
        minus_two, two, minus_root, _ = root_triples
        t = make_tuple(eisenstein, (minus_root, two, minus_two))
        assert t.elems == (minus_two, two, minus_root)
        assert t.size == 3

    def test_double_regular_quadruple_fails_at_last_pair(self, eisenstein, root_triples):
        with pytest.raises(NotDiophantine) as error:
            make_tuple(eisenstein, root_triples)
        assert error.value.pair == (2, 3)
        assert "13" in str(error.value)

    def test_rejects_zero_and_duplicates(self, gaussian, integers):
        with pytest.raises(ZeroElement):
            make_tuple(gaussian, integers(gaussian, 1, 0, 3))
        with pytest.raises(DuplicateElement):
            make_tuple(gaussian, integers(gaussian, 1, 3, 1))
        with pytest.raises(MixedRings):
            make_tuple(RingSpec(-2), integers(gaussian, 1, 3))

    def test_tampered_witness_detected(self, gaussian, integers):
        t = make_tuple(gaussian, integers(gaussian, 1, 3, 8))
        witnesses = dict(t.witnesses)
        witnesses[(0, 1)] = RingElem(3, 0, gaussian)
        assert not check_witnesses(DiophTuple(spec=gaussian, elems=t.elems, witnesses=witnesses))
        del witnesses[(0, 1)]
        assert not check_witnesses(DiophTuple(spec=gaussian, elems=t.elems, witnesses=witnesses))


class TestRegularTriples:
    def test_regular_extensions(self, gaussian, integers, root_triples):
        one, three = integers(gaussian, 1, 3)
        assert values(regular_extensions(one, three)) == [8]
        minus_two, two, minus_root, root = root_triples
        assert set(regular_extensions(minus_two, two)) == {minus_root, root}
        assert regular_extensions(*integers(gaussian, -1, 1)) == ()

    def test_regular_extensions_need_a_pair(self, gaussian, integers):
        with pytest.raises(NotAPair):
            regular_extensions(*integers(gaussian, 1, 2))

    def test_is_regular_triple(self, gaussian, integers, root_triples):
        assert is_regular_triple(*integers(gaussian, 1, 3, 8))
        assert is_regular_triple(root_triples[0], root_triples[1], root_triples[3])
        assert not is_regular_triple(*integers(gaussian, 1, 8, 120))
        with pytest.raises(NotATriple):
            is_regular_triple(*integers(gaussian, 1, 3, 7))

    def test_extension_candidates(self, gaussian, integers):
        candidates = quadruple_extension_candidates(*integers(gaussian, 1, 3, 8))
        assert values(candidates.verified) == [120]
        assert candidates.rejected == ()
        candidates = quadruple_extension_candidates(*integers(gaussian, 1, 3, 120))
        assert values(candidates.verified) == [8, 1680]

    def test_candidates_independent_of_element_order(self, gaussian, integers):
        forward = quadruple_extension_candidates(*integers(gaussian, 1, 3, 8))
        backward = quadruple_extension_candidates(*integers(gaussian, 8, 3, 1))
        assert forward == backward

    def test_c_plus_minus(self, gaussian, integers):
        c_plus, c_minus = c_plus_minus(*integers(gaussian, 1, 3, 120))
        assert (c_plus.u, c_minus.u) == (1680, 8)
        assert c_plus * c_minus == RingElem(13440, 0, gaussian)

    def test_c_plus_minus_regular_case_has_zero(self, gaussian, integers):
        assert RingElem(0, 0, gaussian) in c_plus_minus(*integers(gaussian, 1, 3, 8))

    def test_forbidden_double_regular(self, gaussian, integers, root_triples):
        assert forbidden_double_regular(*root_triples)
        assert not forbidden_double_regular(*integers(gaussian, 1, 3, 8, 120))
        with pytest.raises(ZeroElement):
            forbidden_double_regular(*integers(gaussian, 1, 3, 0, 8))

    def test_products_not_squares(self, gaussian, integers, root_triples):
        assert products_not_squares(*integers(gaussian, 1, 3, 8)) == {"ab": True, "ac": True, "bc": True}
        assert all(products_not_squares(*root_triples[:3]).values())

    def test_double_regular_census(self, eisenstein, root_triples):
        census = double_regular_census(eisenstein, 4, 6)
        minus_two, two, minus_root, root = root_triples
        assert [t.elems for t in census] == [(minus_two, two, minus_root), (minus_two, two, root)]

    def test_census_skips_pairs_with_a_zero_branch(self, gaussian):
        # (1 + i)(-1 + i) + 1 = i^2, but a + b -+ 2i is 0 for one branch
        assert is_diophantine_pair(RingElem(1, 1, gaussian), RingElem(-1, 1, gaussian)) is not None
        assert double_regular_census(gaussian, 2, 2) == []


class TestTupleProperties:
    def test_found_triples_have_no_square_products(self, found_triples):
        assert found_triples
        for t in found_triples:
            assert all(products_not_squares(*t.elems).values()), t

    def test_c_plus_minus_identity(self, found_triples):
        rng = random.Random(7)
        by_ring = {}
        for t in found_triples:
            by_ring.setdefault(t.spec.d, []).append(t)
        sample = [t for triples in by_ring.values() for t in rng.sample(triples, min(100, len(triples)))]
        for t in sample:
            a, b, d = t.elems
            c_plus, c_minus = c_plus_minus(a, b, d)
            assert c_plus * c_minus == c_plus_minus_product(a, b, d)

    def test_regular_extensions_are_regular(self, found_triples):
        for t in found_triples[:50]:
            a, b, _ = t.elems
            for c in regular_extensions(a, b):
                assert is_regular_triple(a, b, c)

    def test_found_triples_sorted(self, found_triples):
        for t in found_triples:
            assert list(t.elems) == sorted(t.elems, key=canonical_key)


class TestDoubleRegularFactorCases:
    def test_d_minus_two(self):
        spec = RingSpec(-2)
        cases = double_regular_factor_cases(spec)
        assert len(cases) == 8
        assert {case.excluded for case in cases} == {None, "cd = 0"}
        live = [case for case in cases if case.excluded is None]
        assert {case.factors for case in live} == {
            (RingElem(1, 1, spec), RingElem(1, -1, spec)),
            (RingElem(1, -1, spec), RingElem(1, 1, spec)),
            (RingElem(-1, 1, spec), RingElem(-1, -1, spec)),
            (RingElem(-1, -1, spec), RingElem(-1, 1, spec)),
        }
        for case in live:
            assert case.difference in (RingElem(1, 0, spec), RingElem(-1, 0, spec))
            assert case.z * case.z == RingElem(-2, 0, spec)
            assert case.cd == RingElem(-3, 0, spec)
            assert case.max_abs_sq_c == 3
            assert case.quadruples == () and case.diophantine == ()

    def test_eisenstein_leaves_only_degenerate_cases(self, eisenstein):
        cases = double_regular_factor_cases(eisenstein)
        assert {case.excluded for case in cases} == {"a = b", "cd = 0"}
        for case in cases:
            if case.excluded == "a = b":
                assert case.cd == RingElem(-4, 0, eisenstein)

    def test_gaussian_unit_factors(self, gaussian):
        live = [case for case in double_regular_factor_cases(gaussian) if case.excluded is None]
        assert len(live) == 4
        assert all(case.cd == RingElem(-5, 0, gaussian) and case.max_abs_sq_c == 5 for case in live)
        assert all(case.quadruples == () for case in live)

    @pytest.mark.parametrize("d", SMALL_RINGS)
    def test_no_diophantine_quadruple(self, d):
        spec = RingSpec(d)
        for case in double_regular_factor_cases(spec):
            assert case.factors[0] * case.factors[1] == RingElem(3, 0, spec)
            assert case.diophantine == ()
            for a, b, c, e in case.quadruples:
                assert min(abs_sq(a), abs_sq(b)) >= 4
                assert forbidden_double_regular(a, b, c, e)

    def test_rejects_empty_annulus(self, gaussian):
        with pytest.raises(ValueError):
            double_regular_factor_cases(gaussian, 0)
