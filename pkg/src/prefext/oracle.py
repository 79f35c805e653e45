"""Brute-force ground truth for small frameworks.

Everything here enumerates subsets directly from the definitions and is meant
to be obviously correct rather than fast.
"""

from __future__ import annotations

from itertools import combinations

from .bits import iter_bits
from .errors import ResourceLimitError
from .framework import ArgumentationFramework, is_admissible

ORACLE_LIMIT = 20


def _subsets_by_size(universe: int):
    items = list(iter_bits(universe))
    for size in range(len(items) + 1):
        for combo in combinations(items, size):
            m = 0
            for i in combo:
                m |= 1 << i
            yield m


def _guard(af: ArgumentationFramework, limit: int) -> None:
    if af.n > limit:
        raise ResourceLimitError(f"oracle limited to {limit} vertices, got {af.n}")


def oracle_admissible_sets(af: ArgumentationFramework, *, limit: int = ORACLE_LIMIT) -> list[int]:
    """Every admissible set, by increasing size then lexicographically."""
    _guard(af, limit)
    return [s for s in _subsets_by_size(af.full) if is_admissible(af, s)]


def _maximal(sets: list[int]) -> list[int]:
    return [a for a in sets if not any(a != b and a & ~b == 0 for b in sets)]


def oracle_preferred_extensions(af: ArgumentationFramework, *, limit: int = ORACLE_LIMIT) -> list[int]:
    return _maximal(oracle_admissible_sets(af, limit=limit))


def oracle_mase(af: ArgumentationFramework, s: int, k: int, *, limit: int = ORACLE_LIMIT) -> list[int]:
    """Maximal admissible subsets ``T`` of ``s`` with ``|s - T| <= k``.

    Maximality is relative to ``s``, not to the whole vertex set.
    """
    _guard(af, limit)
    af.check(s)
    if k < 0:
        return []
    adm = [t for t in _subsets_by_size(s) if is_admissible(af, t)]
    size = s.bit_count()
    return [t for t in _maximal(adm) if size - t.bit_count() <= k]
