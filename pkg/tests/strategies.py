"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from msetmap import Multiset, MultisetMap, OPMap, Space


@st.composite
def spaces(draw, max_size=4, max_bound=5, min_size=0, prefix="x"):
    k = draw(st.integers(min_size, max_size))
    m = draw(st.integers(0, max_bound))
    return Space([f"{prefix}{i}" for i in range(1, k + 1)], m)


def multisets(space):
    return st.lists(st.integers(0, space.bound), min_size=space.size, max_size=space.size).map(
        lambda cs: Multiset(space, cs)
    )


@st.composite
def space_with(draw, count=1, **kw):
    s = draw(spaces(**kw))
    return (s,) + tuple(draw(multisets(s)) for _ in range(count))


@st.composite
def opmaps(draw, m=None, n=None, max_bound=6):
    m = draw(st.integers(0, max_bound)) if m is None else m
    n = (0 if m == 0 else draw(st.integers(0, max_bound))) if n is None else n
    if m == 0:
        return OPMap(0, n, (0,))
    inner = sorted(draw(st.lists(st.integers(0, n), min_size=m - 1, max_size=m - 1)))
    return OPMap(m, n, tuple([0] + inner + [n]))


@st.composite
def maps(draw, max_size=4, max_bound=5):
    dom = draw(spaces(max_size=max_size, max_bound=max_bound, min_size=1))
    cod = draw(spaces(max_size=max_size, max_bound=max_bound, min_size=1, prefix="y"))
    if dom.bound == 0:
        cod = Space(cod.elements, 0)
    u = draw(st.lists(st.sampled_from(cod.elements), min_size=dom.size, max_size=dom.size))
    p = draw(opmaps(dom.bound, cod.bound))
    return MultisetMap(dom, cod, u, p)
