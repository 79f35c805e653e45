import random

import pytest
from hypothesis import given

from conftest import directed_triangle, frameworks
from prefext import (
    PHI,
    ArgumentationFramework,
    OrientedState,
    PreconditionError,
    oracle_preferred_extensions,
    oriented_enumerate,
    recognize_Fn,
)
from prefext.generators import circulant_fn, oriented_triangles, random_oriented
from prefext.oriented import branching_root, check_state, simplify_indeg0, simplify_outdeg0


def test_phi():
    assert abs(PHI - 1.2320546) < 1e-6
    assert abs(1 - 1 / PHI - PHI**-8) < 1e-9
    assert abs(branching_root((1, 1)) - 2) < 1e-9


def test_outdeg0_examples():
    af = ArgumentationFramework(2, [(0, 1)])
    st = OrientedState(0b11, [])
    assert simplify_outdeg0(af, st) and st.und == 0b01 and st.queue == [1]
    path = ArgumentationFramework(3, [(0, 1), (1, 2)])
    st = OrientedState(0b111, [])
    while simplify_outdeg0(path, st):
        pass
    assert st.queue == [2, 1, 0]
    iso = ArgumentationFramework(1)
    st = OrientedState(1, [])
    assert simplify_outdeg0(iso, st) and st.queue == [0]
    assert not simplify_outdeg0(iso, st)


def test_indeg0_examples():
    star = ArgumentationFramework(4, [(0, 1), (0, 2), (0, 3)])
    st = OrientedState(0b1111, [])
    assert simplify_indeg0(star, st) and st.und == 0 and st.queue == [0]
    c = ArgumentationFramework(3, [(0, 1), (1, 2)])
    st = OrientedState(0b111, [])
    simplify_indeg0(c, st)
    assert st.und == 0b100 and st.queue == [0]
    simplify_outdeg0(c, st)
    check_state(c, st)
    assert st.queue == [0, 2]
    assert oriented_enumerate(c)[0] == [0b101]


def test_examples():
    assert oriented_enumerate(directed_triangle())[0] == [0]
    assert oriented_enumerate(circulant_fn(5))[0] == [0]
    assert oriented_enumerate(circulant_fn(7))[0] == [0]


def test_rejects_non_oriented():
    with pytest.raises(PreconditionError):
        oriented_enumerate(ArgumentationFramework(2, [(0, 1), (1, 0)]))
    with pytest.raises(PreconditionError):
        oriented_enumerate(ArgumentationFramework(1, [(0, 0)]))


def _fn_arcs(order, n):
    pos = {v: j for j, v in enumerate(order)}
    return lambda arcs: {((pos[u]) % n, pos[v] % n) for u, v in arcs}


def test_recognize_identity():
    af = circulant_fn(6)
    assert recognize_Fn(af) == list(range(6))


@pytest.mark.parametrize("seed", range(5))
def test_recognize_shuffled(seed):
    n = 9
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    af = ArgumentationFramework(n, [(perm[u], perm[v]) for u, v in circulant_fn(n).arcs])
    order = recognize_Fn(af)
    image = _fn_arcs(order, n)(af.arcs)
    assert image == set(circulant_fn(n).arcs)


def test_recognize_rejects():
    assert recognize_Fn(directed_triangle()) is None
    two = ArgumentationFramework(10, [(u + o, v + o) for u, v in circulant_fn(5).arcs for o in (0, 5)])
    assert recognize_Fn(two) is None


@pytest.mark.parametrize("n", range(5, 19))
def test_fn_counts_and_symmetry(n):
    res, stats = oriented_enumerate(circulant_fn(n))
    assert res == oracle_preferred_extensions(circulant_fn(n)) if n <= 12 else True
    if n % 3:
        assert res == [0]
    else:
        assert len(res) == 3
        for s in res:
            shifted = sum(1 << ((v + 3) % n) for v in range(n) if s >> v & 1)
            assert shifted == s
    assert stats.leaves <= PHI**n


@given(frameworks(max_n=10, oriented=True))
def test_matches_oracle(af):
    res, stats = oriented_enumerate(af, check=True)
    assert res == sorted(oracle_preferred_extensions(af))
    assert stats.leaves <= PHI**af.n + 1e-9


@pytest.mark.parametrize("seed", range(20))
def test_random_dense_matches_oracle(seed):
    rng = random.Random(seed)
    af = random_oriented(rng.randint(6, 12), rng.uniform(0.2, 0.7), seed)
    res, stats = oriented_enumerate(af, check=True)
    assert res == sorted(oracle_preferred_extensions(af))
    assert stats.leaves <= PHI**af.n


def test_oriented_triangles():
    res, _ = oriented_enumerate(oriented_triangles(2))
    assert len(res) == 9
