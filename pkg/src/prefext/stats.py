"""Search-tree instrumentation shared by the branching enumerators."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .errors import ResourceLimitError


@dataclass
class SearchStats:
    """Leaf, node and depth counts of one branching run.

    ``leaves`` counts base-case hits only; subinstances rejected because the
    removal budget went negative are nodes but not leaves.
    """

    leaves: int = 0
    nodes: int = 0
    max_depth: int = 0
    calls: int = 0
    deadline: float | None = field(default=None, repr=False, compare=False)

    def enter(self, depth: int) -> None:
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth
        if self.deadline is not None and self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise ResourceLimitError("wall-clock budget exceeded")

    def absorb(self, other: SearchStats) -> None:
        self.leaves += other.leaves
        self.nodes += other.nodes
        self.calls += other.calls
        self.max_depth = max(self.max_depth, other.max_depth)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("deadline")
        return d
