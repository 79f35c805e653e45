"""Pure-Python set kernels over arbitrary-width ``int`` masks.

This is the reference backend. ``_ckernel`` implements the same interface
for frameworks with at most 64 vertices.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence


class PyKernel:
    backend = "python"
    __slots__ = ("n", "out", "inn")

    def __init__(self, out_masks: Sequence[int], in_masks: Sequence[int]):
        self.n = len(out_masks)
        self.out = tuple(out_masks)
        self.inn = tuple(in_masks)

    def attacked(self, s: int) -> int:
        """Union of the out-neighbourhoods of the members of ``s``."""
        out = self.out
        acc = 0
        while s:
            low = s & -s
            acc |= out[low.bit_length() - 1]
            s ^= low
        return acc

    def conflict_free(self, s: int) -> bool:
        return self.attacked(s) & s == 0

    def fixpoint(self, s: int) -> int:
        """Apply the Undefendable rule to ``s`` until nothing changes.

        A member is dropped when one of its attackers is not attacked by the
        current set. Removal is monotone, so the greatest fixpoint does not
        depend on the order of removals.
        """
        inn = self.inn
        while True:
            att = self.attacked(s)
            keep = s
            x = s
            while x:
                low = x & -x
                if inn[low.bit_length() - 1] & ~att:
                    keep ^= low
                x ^= low
            if keep == s:
                return s
            s = keep

    def collate(self, pool: Sequence[int], ambients: Sequence[int]) -> list[int]:
        """Maximal Subset Collation over the union ``pool`` of candidates.

        For every candidate ``U`` and ambient set ``S_i`` the unique maximal
        admissible subset of ``U & S_i`` is deleted from the pool whenever it
        differs from ``U``. Returns the survivors in increasing mask order.
        """
        cands = sorted(set(pool))
        alive = [True] * len(cands)
        for u in cands:
            for s in ambients:
                m = self.fixpoint(u & s)
                if m != u:
                    j = bisect_left(cands, m)
                    if j < len(cands) and cands[j] == m:
                        alive[j] = False
        return [u for u, keep in zip(cands, alive) if keep]
