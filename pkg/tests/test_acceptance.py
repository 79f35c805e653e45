"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible without
``-s``). Running this file directly prints the same lines without pytest.
"""

import math
import random
import sys
import time
from contextlib import contextmanager


from prefext import (
    CnfFormula,
    MaseInstance,
    apply_psi,
    build_family_exhaustive,
    build_family_random,
    dispatch,
    extended_translate,
    invert_psi,
    mase_enumerate,
    mase_enumerate_2k,
    mis_preferred_enumerate,
    mls_enumerate,
    oracle_mase,
    oracle_preferred_extensions,
    oriented_enumerate,
    oriented_translate,
)
from prefext.generators import (
    bidir_triangles,
    circulant_fn,
    lower_bound,
    oriented_triangles,
    random_digraph,
    random_oriented,
    two_cycles,
)
from prefext.mls import covers

ORIENTED_BASE = 1.23205
FRACTIONS = (0, 0.3, 0.7, 1)

# the leaf-bound check reuses the MASE equivalence instances
_mase_instances = []


@contextmanager
def criterion(label, budget, capsys=None):
    t0 = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if elapsed > budget:
            note = f" over time budget {budget:.0f}s"
            raise AssertionError(f"{label} took {elapsed:.1f}s > {budget}s")
        status = "PASS"
    except BaseException as exc:
        note = note or f" ({type(exc).__name__}: {str(exc)[:120]})"
        raise
    finally:
        elapsed = time.perf_counter() - t0
        line = f"[{status}] {label} ({elapsed:.2f}s){note}"
        if capsys is not None:
            with capsys.disabled():
                print("\n" + line)
        else:
            print(line)


def _random_af(rng, n_max, loops=False):
    n = rng.randint(1, n_max)
    return random_digraph(
        n,
        rng.uniform(0.1, 0.6),
        rng.choice(FRACTIONS),
        rng.randrange(10**9),
        loop_prob=rng.choice([0.0, 0.0, 0.1]) if loops else 0.0,
    )


def test_oracle_equivalence(capsys):
    with criterion("oracle equivalence, 500 digraphs n<=10", 60, capsys):
        rng = random.Random(1)
        oriented_seen = 0
        for _ in range(500):
            af = _random_af(rng, 10)
            want = sorted(oracle_preferred_extensions(af))
            assert mis_preferred_enumerate(af)[0] == want
            assert mls_enumerate(af)[0] == want
            assert sorted(dispatch(af).extensions) == want
            if af.is_oriented():
                oriented_seen += 1
                assert oriented_enumerate(af)[0] == want
        assert oriented_seen > 50


def test_mase_equivalence(capsys):
    with criterion("MASE equivalence, 500 (af, S, k) n<=10", 60, capsys):
        rng = random.Random(2)
        _mase_instances.clear()
        for _ in range(500):
            af = _random_af(rng, 10, loops=True)
            s = rng.randrange(af.full + 1)
            k = rng.randint(0, af.n)
            want = sorted(oracle_mase(af, s, k))
            got, stats = mase_enumerate(MaseInstance(af, s, k))
            assert got == want
            assert mase_enumerate_2k(MaseInstance(af, s, k))[0] == want
            _mase_instances.append((MaseInstance(af, s, k), stats.leaves))


def test_known_counts(capsys):
    with criterion("known counts", 10, capsys):
        for k in range(1, 6):
            assert len(dispatch(bidir_triangles(k)).extensions) == 3**k
        for k in range(1, 9):
            assert len(dispatch(two_cycles(k)).extensions) == 2**k
        tri = oriented_triangles(1)
        assert tri.n == 6 and len(oriented_enumerate(tri)[0]) == 3
        assert len(oracle_preferred_extensions(tri)) == 3
        for n in (5, 7):
            assert oriented_enumerate(circulant_fn(n))[0] == [0]
            assert oracle_preferred_extensions(circulant_fn(n)) == [0]


def test_leaf_count_bounds(capsys):
    with criterion("leaf-count bounds", 120, capsys):
        if not _mase_instances:
            test_mase_equivalence(None)
        for inst, leaves in _mase_instances:
            assert leaves <= 2 ** float(inst.mu)
        for k in range(1, 9):
            af = two_cycles(k)
            inst = MaseInstance(af, af.full, af.n // 2)
            assert mase_enumerate(inst)[1].leaves == 2 ** float(inst.mu)
        rng = random.Random(4)
        for _ in range(300):
            n = rng.randint(1, 24)
            af = random_oriented(n, rng.uniform(0.05, 0.6), rng.randrange(10**9))
            assert oriented_enumerate(af)[1].leaves <= ORIENTED_BASE**n
        for n in range(5, 25):
            assert oriented_enumerate(circulant_fn(n))[1].leaves <= ORIENTED_BASE**n
        for k in range(1, 9):
            af = oriented_triangles(k // 2 + 1)
            assert oriented_enumerate(af)[1].leaves <= ORIENTED_BASE**af.n
        for k in range(1, 8):
            af = bidir_triangles(k)
            leaves = mis_preferred_enumerate(af)[1].leaves
            assert leaves == round(3 ** (af.n / 3))
        for _ in range(200):
            af = _random_af(rng, 12)
            assert mis_preferred_enumerate(af)[1].leaves <= 3 ** (af.n / 3) + af.n


def test_translation_bijection(capsys):
    with criterion("oriented translation bijection, 200 digraphs n<=8", 60, capsys):
        rng = random.Random(5)
        for _ in range(200):
            af = _random_af(rng, 8, loops=True)
            w = oriented_translate(af)
            src = sorted(oracle_preferred_extensions(af))
            if w.target.n <= 14:
                tgt = sorted(oracle_preferred_extensions(w.target))
            else:
                tgt = oriented_enumerate(w.target)[0]
            assert len(tgt) == len(src)
            assert sorted(apply_psi(w, s) for s in src) == tgt
            assert sorted(invert_psi(w, t) for t in tgt) == src


def test_cnf_correspondence(capsys):
    with criterion("CNF correspondence, 100 formulas", 60, capsys):
        rng = random.Random(6)
        unsat = 0
        for _ in range(100):
            n = rng.randint(1, 6)
            clauses = [
                tuple(rng.choice([1, -1]) * v for v in rng.sample(range(1, n + 1), rng.randint(1, min(3, n))))
                for _ in range(rng.randint(0, 8))
            ]
            cnf = CnfFormula.of(n, clauses)
            models = cnf.count_models()
            unsat += models == 0
            got = dispatch(extended_translate(cnf)).count
            assert got == (models if models else 1)
        assert unsat > 0


def test_scale_smoke(capsys):
    with criterion("scale smoke test", 420, capsys):
        t0 = time.perf_counter()
        af = random_oriented(40, 0.15, seed=7)
        _, stats = oriented_enumerate(af)
        assert time.perf_counter() - t0 < 120
        assert stats.leaves <= ORIENTED_BASE**40
        t0 = time.perf_counter()
        g = lower_bound(30, 0.5)
        rep = dispatch(g)
        assert time.perf_counter() - t0 < 300
        assert rep.count == 3**7
        n = oriented_translate(g).target.n if rep.algorithm == "oriented" else g.n
        assert rep.stats.leaves <= ORIENTED_BASE**n


def test_family_validity(capsys):
    with criterion("set-containing family validity, n<=12", 30, capsys):
        for n in range(13):
            for p in range(n + 1):
                for q in range(p, n + 1):
                    assert covers(build_family_random(n, p, q, 0.01, seed=n * 10000 + p * 100 + q))
                    fam = build_family_exhaustive(n, p, q)
                    assert covers(fam) and len(fam.members) == math.comb(n, q)


CRITERIA = [
    test_oracle_equivalence,
    test_mase_equivalence,
    test_known_counts,
    test_leaf_count_bounds,
    test_translation_bijection,
    test_cnf_correspondence,
    test_scale_smoke,
    test_family_validity,
]

if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        try:
            fn(None)
        except BaseException:
            failed += 1
    sys.exit(1 if failed else 0)
