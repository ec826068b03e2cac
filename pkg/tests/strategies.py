from hypothesis import strategies as st

from ring import RingElem, RingSpec

SMALL_RINGS = (-1, -2, -3, -7, -11)


def specs():
    return st.sampled_from(SMALL_RINGS).map(RingSpec)


def elements(spec: RingSpec, bound: int = 50):
    coordinate = st.integers(min_value=-bound, max_value=bound)
    return st.builds(RingElem, coordinate, coordinate, st.just(spec))


def nonzero_elements(spec: RingSpec, bound: int = 50):
    return elements(spec, bound).filter(bool)


@st.composite
def element_pairs(draw, bound: int = 50):
    spec = draw(specs())
    return draw(elements(spec, bound)), draw(elements(spec, bound))
