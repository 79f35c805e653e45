import math
import random

import pytest
from hypothesis import given, strategies as st

from conftest import frameworks
from prefext import (
    ArgumentationFramework,
    InputError,
    PreconditionError,
    build_family_exhaustive,
    build_family_random,
    determine_budget,
    is_admissible,
    mls_enumerate,
    oracle_preferred_extensions,
)
from prefext.generators import bidir_triangles, random_digraph, random_oriented
from prefext.mls import covers, mls_candidates, random_family_size


def test_exhaustive_examples():
    fam = build_family_exhaustive(3, 1, 2)
    assert sorted(fam.members) == [0b011, 0b101, 0b110]
    fam = build_family_exhaustive(4, 2, 2)
    assert len(fam.members) == 6 and covers(fam)
    assert covers(build_family_exhaustive(4, 0, 3))
    with pytest.raises(InputError):
        build_family_exhaustive(3, 2, 1)


def test_random_examples():
    fam = build_family_random(3, 1, 2, 0.01, seed=1)
    assert covers(fam) and len(fam.members) <= 3
    assert covers(build_family_random(6, 0, 3, 0.01, seed=2))
    assert build_family_random(8, 2, 5, 0.01, seed=3) == build_family_random(8, 2, 5, 0.01, seed=3)
    with pytest.raises(InputError):
        build_family_random(4, 1, 2, 1.5)


def test_random_size_formula():
    n, p, q, d = 10, 3, 6, 0.01
    want = math.ceil(math.comb(n, p) / math.comb(q, p) * math.log(math.comb(n, p) / d))
    assert random_family_size(n, p, q, d) == want


def test_random_size_overflow_points_to_exhaustive():
    with pytest.raises(InputError, match="exhaustive"):
        random_family_size(3000, 1500, 1500, 0.01)


@given(st.integers(0, 9), st.data())
def test_family_members_have_size_q(n, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(p, n))
    fam = build_family_random(n, p, q, 0.05, seed=data.draw(st.integers(0, 99)))
    assert all(m.bit_count() == q for m in fam.members)
    assert covers(fam)


def test_budget_examples():
    assert determine_budget(5, 5, 0.5, 0.25) == 5
    assert determine_budget(0, 0, 0.5, 0) == 0
    costs = {t: math.comb(4, t) * 2 ** ((t - 2) / 2) for t in (2, 3, 4)}
    assert determine_budget(4, 2, 0.5, 0) == min(costs, key=costs.get)


def test_mls_bidir_triangles():
    res, stats = mls_enumerate(bidir_triangles(2))
    assert len(res) == 9
    assert stats.calls > 0 and stats.leaves <= stats.nodes


def test_mls_oriented_uses_d_only():
    af = random_oriented(7, 0.4, seed=3)
    assert mls_enumerate(af)[0] == sorted(oracle_preferred_extensions(af))


def test_mls_rejects_loops():
    with pytest.raises(PreconditionError):
        mls_enumerate(ArgumentationFramework(1, [(0, 0)]))


@pytest.mark.parametrize("family", ["exhaustive", "random"])
@pytest.mark.parametrize("seed", range(10))
def test_mls_matches_oracle(seed, family):
    rng = random.Random(seed)
    af = random_digraph(rng.randint(1, 10), rng.uniform(0.1, 0.6), rng.choice([0, 0.3, 0.7, 1]), seed)
    res, _ = mls_enumerate(af, family=family, seed=seed)
    assert res == sorted(oracle_preferred_extensions(af))


@given(frameworks(max_n=7))
def test_candidates_superset_and_admissible(af):
    found, _ = mls_candidates(af)
    pref = oracle_preferred_extensions(af)
    assert set(pref) <= found
    assert all(is_admissible(af, s) for s in found)
