"""Extremal and random instance generators."""

from __future__ import annotations

import math
import random
from pathlib import Path

from .errors import InputError
from .framework import ArgumentationFramework
from .translations import extended_translate, oriented_translate, parse_dimacs


def _disjoint(blocks: list[tuple[int, list[tuple[int, int]]]], prefix: str = "a") -> ArgumentationFramework:
    arcs = []
    base = 0
    for size, block_arcs in blocks:
        arcs += [(base + u, base + v) for u, v in block_arcs]
        base += size
    return ArgumentationFramework(base, arcs, [f"{prefix}{i}" for i in range(base)])


_BIDIR = (3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])
_TWO = (2, [(0, 1), (1, 0)])


def _oriented_triangle_block() -> tuple[int, list[tuple[int, int]]]:
    t = oriented_translate(ArgumentationFramework(3, _BIDIR[1])).target
    return t.n, list(t.arcs)


def _count(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def _prob(value, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise InputError(f"{name} must lie in [0, 1], got {value}")
    return value


def bidir_triangles(k: int) -> ArgumentationFramework:
    return _disjoint([_BIDIR] * _count(k, "k"))


def two_cycles(k: int) -> ArgumentationFramework:
    return _disjoint([_TWO] * _count(k, "k"))


def oriented_triangles(k: int) -> ArgumentationFramework:
    """``k`` disjoint copies of the 6-vertex oriented image of a bidirectional triangle."""
    return _disjoint([_oriented_triangle_block()] * _count(k, "k"))


def circulant_fn(n: int) -> ArgumentationFramework:
    """F_n: arcs ``i -> i+1`` and ``i -> i+2`` modulo ``n``; needs ``n >= 5`` to stay oriented."""
    _count(n, "n", 5)
    arcs = [(i, (i + d) % n) for i in range(n) for d in (1, 2)]
    return ArgumentationFramework(n, arcs)


def random_digraph(
    n: int, arc_prob: float, two_cycle_fraction: float, seed: int = 0, loop_prob: float = 0.0
) -> ArgumentationFramework:
    """Random framework whose resolution order is fixed in advance.

    ``ceil(fraction * n)`` vertices are marked (at least two when any are)
    and paired into 2-cycles; every other vertex pair gets one arc of random
    direction with probability ``arc_prob``, so no further 2-cycles appear.
    """
    _count(n, "n")
    p = _prob(arc_prob, "arc probability")
    frac = _prob(two_cycle_fraction, "2-cycle fraction")
    lp = _prob(loop_prob, "loop probability")
    rng = random.Random(seed)
    marked_count = math.ceil(frac * n - 1e-9)
    if marked_count == 1:
        marked_count = 2 if n >= 2 else 0
    order = list(range(n))
    rng.shuffle(order)
    marked = order[:marked_count]
    linked: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []

    def bidir(u: int, v: int) -> None:
        arcs.extend([(u, v), (v, u)])
        linked.add((min(u, v), max(u, v)))

    for i in range(0, marked_count - 1, 2):
        bidir(marked[i], marked[i + 1])
    if marked_count % 2:
        bidir(marked[-1], marked[-2])
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in linked and rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        if lp and rng.random() < lp:
            arcs.append((u, u))
    return ArgumentationFramework(n, arcs)


def random_oriented(n: int, arc_prob: float, seed: int = 0) -> ArgumentationFramework:
    return random_digraph(n, arc_prob, 0.0, seed)


def from_cnf(path: str | Path) -> ArgumentationFramework:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return extended_translate(parse_dimacs(text))


def lower_bound(n: int, r: float) -> ArgumentationFramework:
    """Bidirectional triangles on about ``r*n`` vertices, oriented triangles on the rest.

    Uses ``floor(r*n/3)`` bidirectional and ``floor((1-r)*n/6)`` oriented
    triangles; any vertices left over are isolated.
    """
    _count(n, "n")
    r = _prob(r, "r")
    k1 = math.floor(r * n / 3 + 1e-9)
    k2 = math.floor((1 - r) * n / 6 + 1e-9)
    blocks = [_BIDIR] * k1 + [_oriented_triangle_block()] * k2
    used = sum(b[0] for b in blocks)
    blocks += [(1, [])] * (n - used)
    return _disjoint(blocks)


KINDS = {
    "bidirTriangles": (bidir_triangles, (int,)),
    "twoCycles": (two_cycles, (int,)),
    "orientedTriangle": (oriented_triangles, (int,)),
    "Fn": (circulant_fn, (int,)),
    "randomDigraph": (random_digraph, (int, float, float)),
    "fromCnf": (from_cnf, (str,)),
    "lowerBound": (lower_bound, (int, float)),
}


def generate(kind: str, params: tuple = (), seed: int = 0) -> ArgumentationFramework:
    """Build an instance of ``kind``; only ``randomDigraph`` uses the seed.

    ``randomDigraph`` also accepts an optional fourth self-loop probability.
    """
    if kind not in KINDS:
        raise InputError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")
    fn, types = KINDS[kind]
    params = tuple(params)
    extra = 1 if kind == "randomDigraph" else 0
    if not len(types) <= len(params) <= len(types) + extra:
        raise InputError(f"{kind} takes {len(types)} parameter(s), got {len(params)}")
    if kind == "randomDigraph":
        return random_digraph(*params[:3], seed=seed, loop_prob=params[3] if len(params) > 3 else 0.0)
    return fn(*params)


def parse_generator_arg(text: str) -> tuple[str, tuple]:
    """``KIND:P1,P2,...`` to ``(kind, params)`` with parameters converted by kind."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind not in KINDS:
        raise InputError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")
    _, types = KINDS[kind]
    if kind == "fromCnf":
        return kind, (rest,)
    raw = [x.strip() for x in rest.split(",")] if rest.strip() else []
    if kind == "randomDigraph" and len(raw) == 4:
        types = types + (float,)
    if len(raw) != len(types):
        raise InputError(f"{kind} takes {len(types)} parameter(s), got {len(raw)}")
    try:
        return kind, tuple(t(x) for t, x in zip(types, raw))
    except ValueError:
        raise InputError(f"bad parameters for {kind}: {rest!r}") from None
