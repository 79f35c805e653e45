"""Algorithm portfolio: choose an enumerator from the 2-cycle fraction."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .errors import InputError, ResourceLimitError
from .framework import ArgumentationFramework, resolution_order
from .mase import MaseInstance, mase_enumerate_2k
from .mis import mis_preferred_enumerate
from .mls import mls_enumerate
from .oracle import oracle_preferred_extensions
from .oriented import PHI, oriented_enumerate
from .stats import SearchStats
from .translations import invert_psi, loopless_translate, oriented_translate

MODES = ("auto", "oracle", "mis", "oriented", "mls", "mase2k")
ORIENTED_BELOW = 0.6684
MIS_ABOVE = 0.8004

MLS_B_BASE = 1 + 2 ** 0.25 - 2 ** -0.5
MLS_D_BASE = 2 - 2 ** -0.5
MIS_BASE = 3 ** (1 / 3)


def base_oriented(r: float) -> float:
    return PHI ** (2 * r) * PHI ** (1 - r)


def base_mls(r: float) -> float:
    return MLS_B_BASE ** r * MLS_D_BASE ** (1 - r)


def base_mis(r: float) -> float:
    return MIS_BASE


def _bisect(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def crossovers() -> tuple[float, float]:
    """Fractions where oriented meets MLS and where MLS meets MIS."""
    a = _bisect(lambda r: math.log(base_oriented(r)) - math.log(base_mls(r)), 0.0, 1.0)
    b = _bisect(lambda r: math.log(base_mls(r)) - math.log(base_mis(r)), 0.0, 1.0)
    return a, b


def thresholds_csv(steps: int = 100) -> str:
    lines = ["r,base_oriented,base_mls,base_mis"]
    for i in range(steps + 1):
        r = i / steps
        lines.append(f"{r:.4f},{base_oriented(r):.6f},{base_mls(r):.6f},{base_mis(r):.6f}")
    return "\n".join(lines) + "\n"


def choose(af: ArgumentationFramework) -> str:
    if af.n == 0:
        return "trivial"
    r = resolution_order(af) / af.n
    if r < ORIENTED_BELOW:
        return "oriented"
    if r <= MIS_ABOVE:
        return "mls"
    return "mis"


@dataclass
class RunReport:
    instance: str
    algorithm: str
    r: float
    count: int
    stats: SearchStats = field(default_factory=SearchStats)
    wall_time: float = 0.0
    extensions: list[int] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "r": self.r,
            "count": self.count,
            "stats": self.stats.as_dict(),
            "wall_time": round(self.wall_time, 6),
        }


def _via_loopless(af, run, stats):
    w = loopless_translate(af)
    found, stats = run(w.target, stats=stats)
    full = af.full
    return sorted({s & full for s in found}), stats


def dispatch(
    af: ArgumentationFramework,
    mode: str = "auto",
    *,
    mls_family: str = "exhaustive",
    seed: int = 0,
    time_limit: float | None = None,
    instance: str = "",
) -> RunReport:
    """Enumerate the preferred extensions of ``af`` with the selected algorithm."""
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    stats = SearchStats()
    if time_limit is not None:
        stats.deadline = time.monotonic() + time_limit
    algo = choose(af) if mode == "auto" else mode
    r = resolution_order(af) / af.n if af.n else 0.0
    t0 = time.perf_counter()
    if algo == "trivial":
        found = [0]
    elif algo == "oracle":
        found = oracle_preferred_extensions(af)
    elif algo == "mis":
        found, stats = _via_loopless(af, mis_preferred_enumerate, stats)
    elif algo == "mls":
        def run(g, stats):
            return mls_enumerate(g, family=mls_family, seed=seed, stats=stats)
        found, stats = _via_loopless(af, run, stats)
    elif algo == "oriented":
        w = oriented_translate(af)
        images, stats = oriented_enumerate(w.target, stats=stats)
        found = sorted(invert_psi(w, t) for t in images)
    else:
        found, stats = mase_enumerate_2k(MaseInstance(af, af.full, af.n), stats=stats)
    elapsed = time.perf_counter() - t0
    if time_limit is not None and elapsed > time_limit:
        raise ResourceLimitError("wall-clock budget exceeded")
    return RunReport(instance, algo, r, len(found), stats, elapsed, list(found))
