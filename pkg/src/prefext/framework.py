"""Argumentation frameworks and the admissibility predicates.

An argumentation framework is a digraph; an arc ``(u, v)`` means ``u``
attacks ``v``. Vertex sets (extensions) are ``int`` bitmasks throughout the
package, see :mod:`prefext.bits`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .bits import iter_bits, mask_of
from .errors import InputError
from .kernel import active_backend, make_kernel

Arc = tuple[int, int]


class ArgumentationFramework:
    """Immutable digraph with per-vertex labels and cached 2-cycle data.

    Duplicate arcs are dropped at construction. Self-loops are kept; the
    algorithms that need loop-freedom route through
    :func:`prefext.translations.loopless_translate`.
    """

    __slots__ = (
        "n",
        "labels",
        "arcs",
        "out_masks",
        "in_masks",
        "two_cycle_members",
        "self_loopers",
        "_index",
        "_kernels",
    )

    def __init__(self, n: int, arcs: Iterable[Arc] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise InputError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InputError("vertex labels must be unique")
        out = [0] * n
        inn = [0] * n
        arc_set = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
            arc_set.add((u, v))
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.labels = labels
        self.arcs = tuple(sorted(arc_set))
        self.out_masks = tuple(out)
        self.in_masks = tuple(inn)
        two = 0
        loops = 0
        for v in range(n):
            if (out[v] & inn[v]) & ~(1 << v):
                two |= 1 << v
            if out[v] >> v & 1:
                loops |= 1 << v
        self.two_cycle_members = two
        self.self_loopers = loops
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._kernels = {}

    @classmethod
    def from_labels(cls, labels: Sequence[str], attacks: Iterable[tuple[str, str]]) -> ArgumentationFramework:
        index = {lab: i for i, lab in enumerate(labels)}
        try:
            arcs = [(index[a], index[b]) for a, b in attacks]
        except KeyError as exc:
            raise InputError(f"attack references unknown argument {exc.args[0]!r}") from None
        return cls(len(labels), arcs, labels)

    def __repr__(self) -> str:
        return f"ArgumentationFramework(n={self.n}, arcs={len(self.arcs)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.labels == other.labels and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.labels, self.arcs))

    @property
    def kernel(self):
        backend = active_backend()
        k = self._kernels.get(backend)
        if k is None:
            k = self._kernels[backend] = make_kernel(self.out_masks, self.in_masks, backend)
        return k

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown argument {label!r}") from None

    def mask(self, items: Iterable[int | str]) -> int:
        """Mask of a collection of vertex indices and/or labels."""
        m = 0
        for x in items:
            i = self._index[x] if isinstance(x, str) else x
            if not 0 <= i < self.n:
                raise InputError(f"vertex {i} outside [0, {self.n})")
            m |= 1 << i
        return m

    def names(self, s: int) -> list[str]:
        return [self.labels[i] for i in iter_bits(s)]

    def check(self, s: int) -> None:
        if s < 0 or s >> self.n:
            raise InputError(f"set {s:#x} has members outside [0, {self.n})")

    def has_self_loops(self) -> bool:
        return self.self_loopers != 0

    def is_oriented(self) -> bool:
        return self.two_cycle_members == 0

    def attackers(self, v: int) -> int:
        return self.in_masks[v]

    def attacked_by(self, s: int) -> int:
        return self.kernel.attacked(s)


def _vertex(af: ArgumentationFramework, v: int) -> None:
    if not 0 <= v < af.n:
        raise InputError(f"vertex {v} outside [0, {af.n})")


def is_conflict_free(af: ArgumentationFramework, s: int) -> bool:
    af.check(s)
    return af.kernel.conflict_free(s)


def is_acceptable(af: ArgumentationFramework, v: int, s: int) -> bool:
    """True iff every attacker of ``v`` is attacked by a member of ``s``."""
    _vertex(af, v)
    af.check(s)
    return af.in_masks[v] & ~af.kernel.attacked(s) == 0


def is_admissible(af: ArgumentationFramework, s: int) -> bool:
    af.check(s)
    att = af.kernel.attacked(s)
    if att & s:
        return False
    return all(af.in_masks[v] & ~att == 0 for v in iter_bits(s))


def resolution_order(af: ArgumentationFramework) -> int:
    """Number of vertices on at least one 2-cycle; self-loops do not count."""
    return af.two_cycle_members.bit_count()


def resolution_order_within(af: ArgumentationFramework, s: int) -> int:
    """Resolution order of the subgraph induced by ``s``, without building it."""
    b = 0
    out, inn = af.out_masks, af.in_masks
    for v in iter_bits(s):
        if out[v] & inn[v] & s & ~(1 << v):
            b += 1
    return b


def induced_subframework(af: ArgumentationFramework, s: int) -> tuple[ArgumentationFramework, list[int]]:
    """Subframework induced by ``s`` and the list mapping new indices to old ones."""
    af.check(s)
    old = list(iter_bits(s))
    new_of = {v: i for i, v in enumerate(old)}
    arcs = [(new_of[u], new_of[v]) for u, v in af.arcs if u in new_of and v in new_of]
    return ArgumentationFramework(len(old), arcs, [af.labels[v] for v in old]), old


def lift(mapping: Sequence[int], s: int) -> int:
    """Map a set of the induced subframework back to the parent's indices."""
    return mask_of(mapping[i] for i in iter_bits(s))


def is_acyclic(af: ArgumentationFramework, s: int) -> bool:
    """True iff the subgraph induced by ``s`` is a DAG (self-loops count as cycles)."""
    out = af.out_masks
    rest = s
    while rest:
        sinks = 0
        for v in iter_bits(rest):
            if out[v] & rest == 0:
                sinks |= 1 << v
        if not sinks:
            return False
        rest &= ~sinks
    return True
