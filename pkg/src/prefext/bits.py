"""Vertex sets as Python ``int`` bitmasks (bit ``i`` set iff vertex ``i`` is a member)."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield member indices in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Index of the lowest set bit; ``-1`` for the empty set."""
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
