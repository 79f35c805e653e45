"""Preferred-extension enumeration for oriented graphs.

The search state is a pair ``(und, def)``: ``und`` holds undecided vertices
and ``def`` is a queue of deferred vertices that induce a DAG and never
attack ``und``. Every node first applies two simplification rules to a
fixpoint, then the first applicable branching case. The number of leaves is
at most ``PHI**n`` where ``PHI`` is the positive root of
``1 - 1/x - 1/x**8``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import iter_bits
from .collation import maximal_subset_collation
from .errors import PreconditionError
from .framework import ArgumentationFramework
from .stats import SearchStats


def branching_root(coeffs: tuple[int, ...], tol: float = 1e-12) -> float:
    """Positive root of ``1 - sum(x**-t for t in coeffs)`` by bisection."""
    lo, hi = 1.0, float(len(coeffs)) + 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if 1 - sum(mid ** -t for t in coeffs) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


PHI = branching_root((1, 8))


@dataclass
class OrientedState:
    und: int
    queue: list[int]

    @property
    def deferred(self) -> int:
        m = 0
        for v in self.queue:
            m |= 1 << v
        return m


def check_state(af: ArgumentationFramework, state: OrientedState) -> None:
    """Assert the three state invariants."""
    dmask = state.deferred
    assert state.und & dmask == 0, "und and def overlap"
    assert len(set(state.queue)) == len(state.queue), "def has repeats"
    earlier = 0
    for v in state.queue:
        assert af.out_masks[v] & dmask & ~earlier == 0, "def vertex attacks a later def vertex"
        earlier |= 1 << v
    for v in state.queue:
        assert af.out_masks[v] & state.und == 0, "def vertex attacks und"


def simplify_outdeg0(af: ArgumentationFramework, state: OrientedState) -> bool:
    """Move the lowest ``und`` vertex without out-neighbours in ``und`` to ``def``.

    Returns False when no such vertex exists.
    """
    und = state.und
    for v in iter_bits(und):
        if af.out_masks[v] & und == 0:
            state.und = und & ~(1 << v)
            state.queue.append(v)
            return True
    return False


def simplify_indeg0(af: ArgumentationFramework, state: OrientedState) -> bool:
    """For the lowest unattacked ``und`` vertex, drop its victims and defer it.

    Returns False when no such vertex exists.
    """
    und = state.und
    for v in iter_bits(und):
        if af.in_masks[v] & und == 0:
            state.und = und & ~(af.out_masks[v] | (1 << v))
            state.queue.append(v)
            return True
    return False


def _components(af: ArgumentationFramework, und: int) -> list[int]:
    """Weakly connected components of ``G[und]`` as masks, ordered by lowest vertex."""
    parent = {v: v for v in iter_bits(und)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in parent:
        for w in iter_bits(af.out_masks[v] & und):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    comps: dict[int, int] = {}
    for v in parent:
        r = find(v)
        comps[r] = comps.get(r, 0) | 1 << v
    return [comps[r] for r in sorted(comps)]


def _recognize_fn(out: tuple[int, ...], inn: tuple[int, ...], comp: int) -> list[int] | None:
    """Vertices of ``comp`` listed so that position ``j`` plays vertex ``j`` of F_n.

    Follows the chain construction: start from a vertex and its two
    attackers, then repeatedly append the missing attacker of the
    second-to-last vertex. Returns None if the result is not F_n.
    """
    verts = list(iter_bits(comp))
    n = len(verts)
    for v in verts:
        if (out[v] & comp).bit_count() != 2 or (inn[v] & comp).bit_count() != 2:
            return None
    v0 = verts[0]
    p, q = iter_bits(inn[v0] & comp)
    if out[q] >> p & 1:
        v1, v2 = p, q
    elif out[p] >> q & 1:
        v1, v2 = q, p
    else:
        return None
    seq = [v0, v1, v2]
    seen = (1 << v0) | (1 << v1) | (1 << v2)
    while True:
        missing = inn[seq[-2]] & comp & ~seen
        if not missing:
            break
        x = (missing & -missing).bit_length() - 1
        seq.append(x)
        seen |= 1 << x
    if len(seq) != n:
        return None
    # seq[i] attacks seq[i-1] and seq[i-2]; F_n arcs go j -> j+1, j+2
    order = [seq[(-j) % n] for j in range(n)]
    for j, v in enumerate(order):
        want = (1 << order[(j + 1) % n]) | (1 << order[(j + 2) % n])
        if out[v] & comp != want:
            return None
    return order


def recognize_Fn(component: ArgumentationFramework) -> list[int] | None:
    """Isomorphism from F_n onto a (2,2)-regular component with adjacent attackers.

    Returns ``order`` with ``order[j]`` the vertex playing ``j``, so that the
    arcs are exactly ``order[j] -> order[j+1]`` and ``order[j] -> order[j+2]``
    (indices mod n). None when the preconditions fail.
    """
    full = component.full
    if full == 0 or component.has_self_loops():
        return None
    if len(_components(component, full)) != 1:
        return None
    return _recognize_fn(component.out_masks, component.in_masks, full)


class _Oriented:
    def __init__(self, af: ArgumentationFramework, stats: SearchStats, check: bool):
        self.af = af
        self.out = af.out_masks
        self.inn = af.in_masks
        self.kernel = af.kernel
        self.stats = stats
        self.check = check

    def simplify(self, state: OrientedState) -> None:
        af = self.af
        while simplify_outdeg0(af, state) or simplify_indeg0(af, state):
            pass

    def run(self, und: int, queue: list[int], depth: int, cap: int | None) -> list[int]:
        self.stats.enter(depth)
        state = OrientedState(und, list(queue))
        self.simplify(state)
        if self.check:
            check_state(self.af, state)
            if cap is not None:
                assert state.und.bit_count() <= cap, "measure dropped less than the branching vector"
        if state.und == 0:
            self.stats.leaves += 1
            return [self.kernel.fixpoint(state.deferred)]
        mu = state.und.bit_count()
        pairs = []
        for cu, cq, drop in self.branch(state):
            found = self.run(cu, cq, depth + 1, mu - drop)
            pairs.append((cu | _mask(cq), found))
        return maximal_subset_collation(self.af, pairs)

    def branch(self, state: OrientedState) -> list[tuple[int, list[int], int]]:
        """Children ``(und', def', guaranteed drop of |und|)`` of the first applicable case.

        Components that no admissible set can meet are removed through a
        single child that deletes them from ``und`` without deferring them.
        """
        und, queue = state.und, state.queue
        out, inn = self.out, self.inn
        ind: dict[int, int] = {}
        outd: dict[int, int] = {}
        for v in iter_bits(und):
            ind[v] = (inn[v] & und).bit_count()
            outd[v] = (out[v] & und).bit_count()

        def deg(v: int) -> int:
            return ind[v] + outd[v]

        def closed(v: int) -> int:
            return (out[v] | inn[v] | (1 << v)) & und

        def include(v: int, drop: int, also: int = 0):
            return (und & ~(closed(v) | also), queue + [v], drop)

        def exclude(vs: int, drop: int):
            return (und & ~vs, list(queue), drop)

        def attackers(v: int) -> list[int]:
            return list(iter_bits(inn[v] & und))

        # high total degree
        for v in ind:
            if deg(v) >= 7:
                return [include(v, deg(v) + 1), exclude(1 << v, 1)]

        # a vertex with exactly one attacker
        for v in ind:
            if ind[v] != 1:
                continue
            (a,) = attackers(v)
            b = next(iter_bits(out[v] & und))
            if deg(a) >= 3 or deg(v) >= 3:
                return [include(a, deg(a) + 1), exclude(1 << a, deg(v) + 1)]
            if deg(b) >= 3:
                return [include(b, deg(b) + 1), exclude(1 << b, 3)]
            trio = (1 << a) | (1 << v) | (1 << b)
            if out[b] >> a & 1:
                # isolated directed triangle: no admissible set meets it
                return [exclude(trio, 3)]
            return [include(a, 4), exclude(1 << a, 3)]

        # in-degree differs from out-degree
        for v in ind:
            if outd[v] > ind[v]:
                a, b = attackers(v)
                if deg(a) == 3 or deg(b) == 3:
                    return [include(v, deg(v) + 1), exclude(1 << v, 2)]
                return [
                    include(a, deg(a) + 1),
                    include(b, deg(b) + 1),
                    exclude((1 << a) | (1 << b), deg(v) + 1),
                ]

        comps = _components(self.af, und)

        # a (2,2)-regular component
        for comp in comps:
            vs = list(iter_bits(comp))
            if not all(ind[v] == 2 and outd[v] == 2 for v in vs):
                continue
            for v in vs:
                a, b = attackers(v)
                if not ((out[a] >> b) & 1 or (out[b] >> a) & 1):
                    return [
                        include(a, 5),
                        include(b, 6, also=1 << a),
                        exclude((1 << a) | (1 << b), 5),
                    ]
            order = _recognize_fn(out, inn, comp)
            if order is None:
                raise AssertionError("(2,2)-component with adjacent attackers is not F_n")
            size = len(vs)
            if size % 3:
                # F_n with 3 not dividing n has only the empty admissible set
                return [exclude(comp, size)]
            x, y = order[0], order[1]
            return [include(x, size), include(y, size), exclude((1 << x) | (1 << y), size)]

        # a (3,3)-regular component
        for comp in comps:
            vs = list(iter_bits(comp))
            if all(ind[v] == 3 and outd[v] == 3 for v in vs):
                v = vs[0]
                a, b, c = attackers(v)
                return [
                    include(a, 7),
                    include(b, 7),
                    include(c, 7),
                    exclude((1 << a) | (1 << b) | (1 << c), 7),
                ]

        # balanced component mixing (2,2) and (3,3) vertices
        for v in ind:
            if ind[v] == 2 and outd[v] == 2:
                atk = attackers(v)
                heavy = [a for a in atk if ind[a] == 3 and outd[a] == 3]
                if heavy:
                    a = heavy[0]
                    b = atk[0] if atk[1] == a else atk[1]
                    return [
                        include(a, 7),
                        include(b, deg(b) + 1),
                        exclude((1 << a) | (1 << b), 5),
                    ]
        raise AssertionError("no branching case applies")


def _mask(queue: list[int]) -> int:
    m = 0
    for v in queue:
        m |= 1 << v
    return m


def oriented_enumerate(
    af: ArgumentationFramework, *, stats: SearchStats | None = None, check: bool = __debug__
) -> tuple[list[int], SearchStats]:
    """All preferred extensions of a loop-free oriented framework.

    With ``check`` the state invariants and every branching-vector entry are
    asserted at each node.
    """
    if af.has_self_loops() or not af.is_oriented():
        raise PreconditionError(
            "oriented_enumerate needs a loop-free oriented graph; apply oriented_translate first"
        )
    stats = stats if stats is not None else SearchStats()
    stats.calls += 1
    found = _Oriented(af, stats, check).run(af.full, [], 0, None)
    return sorted(found), stats
