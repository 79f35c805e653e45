"""Two-phase monotone local search over 2-cycle and non-2-cycle vertices."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bits import iter_bits
from .collation import maximal_sets
from .errors import InputError, PreconditionError
from .framework import ArgumentationFramework
from .mase import MaseInstance, mase_enumerate
from .stats import SearchStats

VERIFY_LIMIT = 20


@dataclass(frozen=True)
class SetContainingFamily:
    """``q``-subsets of ``range(n)`` such that every ``p``-subset lies in one of them."""

    n: int
    p: int
    q: int
    members: tuple[int, ...]
    verified: bool = True


def _check_bounds(n: int, p: int, q: int) -> None:
    if not 0 <= p <= q <= n:
        raise InputError(f"need 0 <= p <= q <= n, got n={n} p={p} q={q}")


def _combos(n: int, size: int):
    for c in combinations(range(n), size):
        m = 0
        for i in c:
            m |= 1 << i
        yield m


def build_family_exhaustive(n: int, p: int, q: int) -> SetContainingFamily:
    _check_bounds(n, p, q)
    return SetContainingFamily(n, p, q, tuple(_combos(n, q)))


def covers(family: SetContainingFamily) -> bool:
    """Exhaustively check that every ``p``-subset is inside some member."""
    p = family.p
    seen = set()
    for y in family.members:
        for c in combinations(list(iter_bits(y)), p):
            m = 0
            for i in c:
                m |= 1 << i
            seen.add(m)
    return len(seen) == math.comb(family.n, p)


def random_family_size(n: int, p: int, q: int, delta: float) -> int:
    """Sample count giving failure probability at most ``delta`` by the union bound."""
    total = math.comb(n, p)
    try:
        ratio = total / math.comb(q, p)
        return max(1, math.ceil(ratio * math.log(total / delta)))
    except OverflowError:
        raise InputError("binomial too large for the random family; use the exhaustive family") from None


def build_family_random(n: int, p: int, q: int, delta: float = 0.01, seed: int = 0) -> SetContainingFamily:
    """Uniform random ``q``-subsets; verified and resampled while ``n <= 20``.

    Above the verification limit the family is returned with
    ``verified=False``: it covers every ``p``-subset with probability at
    least ``1 - delta``.
    """
    _check_bounds(n, p, q)
    if not 0 < delta < 1:
        raise InputError("delta must lie in (0, 1)")
    m = random_family_size(n, p, q, delta)
    rng = random.Random(seed)
    universe = range(n)
    while True:
        chosen = set()
        for _ in range(m):
            x = 0
            for i in rng.sample(universe, q):
                x |= 1 << i
            chosen.add(x)
        fam = SetContainingFamily(n, p, q, tuple(sorted(chosen)), verified=n <= VERIFY_LIMIT)
        if n > VERIFY_LIMIT or covers(fam):
            return fam


def determine_budget(
    universe_size: int, s: int, cost_per_extra: float, cost_per_member: float
) -> int:
    """Member size ``t`` in ``[s, universe_size]`` minimising the sampling cost.

    The cost is ``C(universe_size, t) * 2**(cost_per_extra*(t-s) + cost_per_member*t)``;
    ties go to the smallest ``t``.
    """
    if not 0 <= s <= universe_size:
        raise InputError("need 0 <= s <= universe_size")
    best_t, best = s, math.inf
    for t in range(s, universe_size + 1):
        cost = math.log2(math.comb(universe_size, t)) + cost_per_extra * (t - s) + cost_per_member * t
        if cost < best - 1e-12:
            best_t, best = t, cost
    return best_t


@lru_cache(maxsize=None)
def _cached_family(kind: str, n: int, p: int, q: int, seed: int) -> SetContainingFamily:
    if kind == "exhaustive":
        return build_family_exhaustive(n, p, q)
    return build_family_random(n, p, q, 0.01, seed)


def _embed(local: int, verts: list[int]) -> int:
    m = 0
    for i in iter_bits(local):
        m |= 1 << verts[i]
    return m


def mls_candidates(
    af: ArgumentationFramework,
    *,
    family: str = "exhaustive",
    seed: int = 0,
    stats: SearchStats | None = None,
) -> tuple[set[int], SearchStats]:
    """Every MASE result gathered by the two sampling phases, before filtering.

    Contains all preferred extensions and possibly some non-maximal
    admissible sets.
    """
    if af.has_self_loops():
        raise PreconditionError("self-loops present; apply loopless_translate first")
    if family not in ("exhaustive", "random"):
        raise InputError(f"unknown family kind {family!r}")
    stats = stats if stats is not None else SearchStats()
    bad = list(iter_bits(af.two_cycle_members))
    good = list(iter_bits(af.full & ~af.two_cycle_members))
    nb, nd = len(bad), len(good)
    found: set[int] = set()
    d_plan = []
    for d in range(nd + 1):
        d2 = determine_budget(nd, d, 0.5, 0.0)
        fam = _cached_family(family, nd, d, d2, seed + 7919 * d)
        d_plan.append((d, d2, [_embed(t, good) for t in fam.members]))
    for b in range(nb + 1):
        b2 = determine_budget(nb, b, 0.5, 0.25)
        fam = _cached_family(family, nb, b, b2, seed + 104729 * (b + 1))
        for sb in (_embed(x, bad) for x in fam.members):
            for d, d2, tds in d_plan:
                k = (b2 - b) + (d2 - d)
                for td in tds:
                    res, _ = mase_enumerate(MaseInstance(af, sb | td, k), stats=stats, check_measure=False)
                    found.update(res)
    return found, stats


def mls_enumerate(
    af: ArgumentationFramework,
    *,
    family: str = "exhaustive",
    seed: int = 0,
    stats: SearchStats | None = None,
) -> tuple[list[int], SearchStats]:
    """Preferred extensions of a loop-free framework by two-phase sampling."""
    found, stats = mls_candidates(af, family=family, seed=seed, stats=stats)
    return maximal_sets(found), stats
