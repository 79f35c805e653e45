import pytest
from hypothesis import settings, strategies as st

from prefext import ArgumentationFramework
from prefext.kernel import available_backends, use_backend

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=available_backends())
def backend(request):
    with use_backend(request.param):
        yield request.param


@st.composite
def frameworks(draw, max_n=8, min_n=0, loops=False, oriented=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if oriented:
        pairs = [(u, v) for u, v in pairs if u < v]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(chosen, flips)]
    else:
        arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if loops and n:
        arcs += [(v, v) for v in draw(st.lists(st.integers(0, n - 1), unique=True, max_size=2))]
    return ArgumentationFramework(n, arcs)


@st.composite
def framework_and_set(draw, max_n=8, loops=False):
    af = draw(frameworks(max_n=max_n, loops=loops))
    s = draw(st.integers(0, af.full))
    return af, s


def chain():
    """a -> b -> c"""
    return ArgumentationFramework.from_labels("abc", [("a", "b"), ("b", "c")])


def two_cycle():
    return ArgumentationFramework.from_labels("uv", [("u", "v"), ("v", "u")])


def directed_triangle():
    return ArgumentationFramework.from_labels("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def bidir_triangle():
    return ArgumentationFramework.from_labels(
        "abc", [(x, y) for x in "abc" for y in "abc" if x != y]
    )
