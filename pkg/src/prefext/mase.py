"""Maximal Admissible Subset Enumeration (MASE).

Given a framework ``G``, a candidate set ``S`` and a budget ``k``, list every
maximal admissible ``T`` contained in ``S`` with ``|S - T| <= k``.

:func:`mase_enumerate` is the measured branching algorithm whose search tree
has at most ``2**(k/2 + b/4)`` leaves, ``b`` being the number of vertices of
``G[S]`` on a 2-cycle. :func:`mase_enumerate_2k` is the plain arc-branching
algorithm with at most ``2**k`` leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bits import iter_bits
from .collation import maximal_subset_collation
from .framework import ArgumentationFramework, resolution_order_within
from .stats import SearchStats


@dataclass(frozen=True)
class MaseInstance:
    af: ArgumentationFramework
    s: int
    k: int

    def __post_init__(self):
        self.af.check(self.s)

    @property
    def b(self) -> int:
        return resolution_order_within(self.af, self.s)

    @property
    def mu(self) -> Fraction:
        return Fraction(self.k, 2) + Fraction(self.b, 4)


def apply_undefendable(af: ArgumentationFramework, s: int) -> tuple[int, int]:
    """Remove the lowest-index member of ``s`` that cannot be defended.

    A member ``u`` is undefendable when some attacker of ``u`` (anywhere in
    the framework) is attacked by no member of ``s``. Returns the new set and
    the number of removed vertices (0 or 1).
    """
    att = af.kernel.attacked(s)
    for u in iter_bits(s):
        if af.in_masks[u] & ~att:
            return s & ~(1 << u), 1
    return s, 0


def _drop_self_loopers(af: ArgumentationFramework, s: int, k: int) -> tuple[int, int]:
    # a self-attacking vertex lies in no conflict-free set; removing it costs budget
    loops = s & af.self_loopers
    return s & ~loops, k - loops.bit_count()


class _Mase:
    def __init__(self, af: ArgumentationFramework, stats: SearchStats, check_measure: bool):
        self.af = af
        self.kernel = af.kernel
        self.out = af.out_masks
        self.inn = af.in_masks
        self.stats = stats
        self.check_measure = check_measure

    def measure4(self, s: int, k: int) -> int:
        """Four times the measure: ``2k + b``."""
        out, inn = self.out, self.inn
        b = 0
        for v in iter_bits(s):
            if out[v] & inn[v] & s:
                b += 1
        return 2 * k + b

    def run(self, s: int, k: int, depth: int, cap4: int | None) -> list[int]:
        stats = self.stats
        stats.enter(depth)
        if k < 0:
            return []
        t = self.kernel.fixpoint(s)
        k -= (s ^ t).bit_count()
        s = t
        if k < 0:
            return []
        m4 = self.measure4(s, k)
        if self.check_measure and cap4 is not None:
            assert m4 <= cap4, f"measure {m4}/4 exceeds branching bound {cap4}/4"
        if self.kernel.conflict_free(s):
            # undefendable fixpoint of a conflict-free set is admissible
            stats.leaves += 1
            return [s]
        children = self.branch(s, k)
        results = []
        for cs, ck, drop4 in children:
            found = self.run(cs, ck, depth + 1, m4 - drop4)
            results.append((cs, found))
        return maximal_subset_collation(self.af, results)

    def branch(self, s: int, k: int) -> list[tuple[int, int, int]]:
        """Children ``(S', k', guaranteed drop of 4*measure)`` of the first applicable case."""
        out, inn = self.out, self.inn
        deg: dict[int, tuple[int, int, int]] = {}
        two_cycle = -1
        max_deg = 0
        for v in iter_bits(s):
            o = out[v] & s
            i = inn[v] & s
            deg[v] = (i.bit_count(), o.bit_count(), o | i)
            if two_cycle < 0 and o & i:
                two_cycle = v
            max_deg = max(max_deg, i.bit_count() + o.bit_count())

        def include(v: int, drop4: int):
            nb = deg[v][2]
            return (s & ~nb, k - nb.bit_count(), drop4)

        def exclude(v: int, drop4: int):
            return (s & ~(1 << v), k - 1, drop4)

        if two_cycle < 0 and max_deg <= 2:
            # disjoint directed cycles and isolated vertices
            v = next(x for x in deg if deg[x][2])
            return [include(v, 4), exclude(v, 4)]
        if two_cycle >= 0:
            v = two_cycle
            w = next(iter_bits(out[v] & inn[v] & s))
            if deg[v][2] == 1 << w and deg[w][2] == 1 << v:
                return [include(v, 4), exclude(v, 4)]
            nv, nw = deg[v][2].bit_count(), deg[w][2].bit_count()
            x = v if nv >= nw else w
            return [include(x, 6), exclude(x, 3)]
        if max_deg >= 4:
            v = next(x for x in deg if deg[x][0] + deg[x][1] >= 4)
            return [include(v, 8), exclude(v, 2)]
        v = next(x for x in deg if deg[x][0] == 1 and deg[x][1] == 2)
        u = next(iter_bits(inn[v] & s))
        return [include(u, 4), exclude(u, 6)]


def mase_enumerate(
    instance: MaseInstance, *, stats: SearchStats | None = None, check_measure: bool = __debug__
) -> tuple[list[int], SearchStats]:
    """All maximal admissible subsets of ``instance.s`` within distance ``instance.k``.

    With ``check_measure`` each child asserts that the measure dropped by at
    least the amount its branching rule guarantees.
    """
    stats = stats if stats is not None else SearchStats()
    stats.calls += 1
    af = instance.af
    s, k = _drop_self_loopers(af, instance.s, instance.k)
    found = _Mase(af, stats, check_measure).run(s, k, 0, None)
    return sorted(found), stats


def mase_enumerate_2k(
    instance: MaseInstance, *, stats: SearchStats | None = None
) -> tuple[list[int], SearchStats]:
    """Same contract as :func:`mase_enumerate`, branching on the endpoints of an arc."""
    stats = stats if stats is not None else SearchStats()
    stats.calls += 1
    af = instance.af
    kernel = af.kernel
    out = af.out_masks

    def run(s: int, k: int, depth: int) -> list[int]:
        stats.enter(depth)
        if k < 0:
            return []
        for u in iter_bits(s):
            hit = out[u] & s
            if hit:
                v = (hit & -hit).bit_length() - 1
                kids = [s & ~(1 << u), s & ~(1 << v)]
                return maximal_subset_collation(af, [(c, run(c, k - 1, depth + 1)) for c in kids])
        t = kernel.fixpoint(s)
        if (s ^ t).bit_count() > k:
            return []
        stats.leaves += 1
        return [t]

    s, k = _drop_self_loopers(af, instance.s, instance.k)
    return sorted(run(s, k, 0)), stats
