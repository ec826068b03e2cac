import pytest

from ring import RingElem, RingSpec


@pytest.fixture
def gaussian() -> RingSpec:
    return RingSpec(-1)


@pytest.fixture
def eisenstein() -> RingSpec:
    return RingSpec(-3)


@pytest.fixture
def integers():
    """Rational integers of a ring: integers(spec, 1, 3, 8) -> [1, 3, 8] as ring elements."""

    def build(spec: RingSpec, *values: int):
        return [RingElem(n, 0, spec) for n in values]

    return build


@pytest.fixture(autouse=True)
def no_cache_env(monkeypatch):
    monkeypatch.delenv("DIOPH_CACHE_DIR", raising=False)
    monkeypatch.delenv("DIOPH_THREADS", raising=False)
