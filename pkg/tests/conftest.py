from functools import lru_cache

from hypothesis import strategies as st

from trirook import PartialMap, enumerate_bn, make_partial_map


@lru_cache(maxsize=None)
def bn(n: int) -> tuple[PartialMap, ...]:
    """All of B_n, cached across tests."""
    return tuple(enumerate_bn(n))


@st.composite
def partial_maps(draw, max_n: int = 6, min_n: int = 1) -> PartialMap:
    """Arbitrary injective partial maps (not necessarily planar/triangular)."""
    n = draw(st.integers(min_n, max_n))
    size = draw(st.integers(0, n))
    dom = draw(st.sets(st.integers(1, n), min_size=size, max_size=size))
    img = draw(st.sets(st.integers(1, n), min_size=size, max_size=size))
    assign = draw(st.permutations(sorted(img)))
    return make_partial_map(n, zip(sorted(dom), assign))


@st.composite
def bn_maps(draw, n: int = None, max_n: int = 6) -> PartialMap:
    """Elements of B_n: image entries drawn below their sources."""
    if n is None:
        n = draw(st.integers(1, max_n))
    size = draw(st.integers(0, n))
    dom = sorted(draw(st.sets(st.integers(1, n), min_size=size, max_size=size)))
    img = []
    lowest = 1
    for s in dom:
        t = draw(st.integers(lowest, s))
        img.append(t)
        lowest = t + 1
    return make_partial_map(n, zip(dom, img))
