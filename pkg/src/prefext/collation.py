"""Unique maximal admissible subsets of DAGs and Maximal Subset Collation."""

from __future__ import annotations

from typing import Iterable, Sequence

from .bits import iter_bits
from .errors import PreconditionError
from .framework import ArgumentationFramework, is_acyclic


def unique_max_admissible_of_dag(af: ArgumentationFramework, s: int, *, check: bool = True) -> int:
    """The unique maximal admissible subset of a set inducing a DAG.

    Computed by applying the Undefendable rule until it no longer fires.
    """
    if check:
        af.check(s)
        if not is_acyclic(af, s):
            raise PreconditionError("the set does not induce a DAG")
    return af.kernel.fixpoint(s)


def maximal_subset_collation(
    af: ArgumentationFramework,
    inputs: Iterable[tuple[int, Iterable[int]]],
) -> list[int]:
    """Inclusion-maximal elements of the union of the ``C_i``.

    ``inputs`` holds pairs ``(S_i, C_i)`` where every member of ``C_i`` is a
    maximal admissible subset of ``S_i``. A candidate ``M`` is discarded when
    it is the unique maximal admissible subset of ``U & S_i`` for some other
    candidate ``U``. Output is sorted by mask value.
    """
    ambients: list[int] = []
    pool: list[int] = []
    for s, found in inputs:
        ambients.append(s)
        pool.extend(found)
    if __debug__:
        for u in set(pool):
            assert af.kernel.conflict_free(u), "collation candidate is not conflict-free"
    if len(ambients) == 1:
        return sorted(set(pool))
    return af.kernel.collate(pool, sorted(set(ambients)))


def maximal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a collection of masks, sorted by value.

    Superset queries go through per-vertex membership masks over the kept
    sets, so the cost is near-linear in the output for typical inputs.
    """
    distinct = sorted(set(sets), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    containing: dict[int, int] = {}
    everything = 0
    for m in distinct:
        sup = everything
        for v in iter_bits(m):
            sup &= containing.get(v, 0)
            if not sup:
                break
        if sup:
            continue
        bit = 1 << len(kept)
        kept.append(m)
        everything |= bit
        for v in iter_bits(m):
            containing[v] = containing.get(v, 0) | bit
    return sorted(kept)


def pairwise_maximal(sets: Sequence[int]) -> list[int]:
    """Quadratic reference filter for :func:`maximal_sets`."""
    distinct = set(sets)
    return sorted(a for a in distinct if not any(a != b and a & ~b == 0 for b in distinct))
