"""Graph translations: loopless, oriented (with its extension bijection) and
the CNF extended translation used to generate hard instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .bits import iter_bits
from .errors import ConsistencyError, InputError, ParseError
from .framework import ArgumentationFramework


@dataclass(frozen=True)
class TranslationWitness:
    """Source, target and the vertex correspondence between them.

    ``vertex_map[i]`` is the target index of source vertex ``i``;
    ``duplicates`` maps a source vertex to the target index of its copy
    ``w_i`` (only vertices on a 2-cycle get one). ``roles`` tags the added
    target vertices with ``"l1"``, ``"l2"``, ``"l3"`` or ``"w"``.
    """

    source: ArgumentationFramework
    target: ArgumentationFramework
    vertex_map: tuple[int, ...]
    duplicates: dict[int, int] = field(default_factory=dict)
    roles: dict[int, str] = field(default_factory=dict)


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name = "_" + name
    taken.add(name)
    return name


def loopless_translate(af: ArgumentationFramework, *, conditional: bool = True) -> TranslationWitness:
    """Replace every self-loop by an attack from an undefendable 3-cycle.

    With ``conditional`` set, a loop-free input is returned unchanged (no
    guard vertices are added).
    """
    identity = tuple(range(af.n))
    if conditional and not af.has_self_loops():
        return TranslationWitness(af, af, identity)
    taken = set(af.labels)
    l1, l2, l3 = af.n, af.n + 1, af.n + 2
    labels = list(af.labels) + [_fresh(x, taken) for x in ("l1", "l2", "l3")]
    arcs = [(u, v) for u, v in af.arcs if u != v]
    arcs += [(l1, v) for v in iter_bits(af.self_loopers)]
    arcs += [(l1, l2), (l2, l3), (l3, l1)]
    target = ArgumentationFramework(af.n + 3, arcs, labels)
    return TranslationWitness(af, target, identity, roles={l1: "l1", l2: "l2", l3: "l3"})


def oriented_translate(af: ArgumentationFramework, *, force_loopless: bool = False) -> TranslationWitness:
    """Oriented framework whose preferred extensions biject with those of ``af``.

    Every vertex on a 2-cycle gets a duplicate ``w_i``; each 2-cycle
    ``v_i <-> v_j`` (``i < j``) becomes the 4-cycle
    ``v_i -> v_j -> w_i -> w_j -> v_i`` and every other arc is fanned out
    over the existing copies of both endpoints. Self-loops are first removed
    by :func:`loopless_translate`; ``force_loopless`` adds its three guard
    vertices even when the input has no self-loops.
    """
    inner = loopless_translate(af, conditional=not force_loopless)
    g = inner.target
    twos = g.two_cycle_members
    dup: dict[int, int] = {}
    labels = list(g.labels)
    taken = set(labels)
    for v in iter_bits(twos):
        dup[v] = len(labels)
        labels.append(_fresh(g.labels[v] + "'", taken))
    arcs: list[tuple[int, int]] = []
    arc_set = set(g.arcs)
    for i, j in g.arcs:
        if (j, i) in arc_set:
            if i < j:
                wi, wj = dup[i], dup[j]
                arcs += [(i, j), (j, wi), (wi, wj), (wj, i)]
        else:
            heads = [j] + ([dup[j]] if j in dup else [])
            tails = [i] + ([dup[i]] if i in dup else [])
            arcs += [(t, h) for t in tails for h in heads]
    target = ArgumentationFramework(len(labels), arcs, labels)
    roles = dict(inner.roles)
    roles.update({w: "w" for w in dup.values()})
    duplicates = {v: w for v, w in dup.items() if v < af.n}
    return TranslationWitness(af, target, inner.vertex_map, duplicates, roles)


def apply_psi(witness: TranslationWitness, s: int) -> int:
    """Image of a source set: its vertices plus the duplicates of its 2-cycle members."""
    witness.source.check(s)
    t = 0
    for v in iter_bits(s):
        t |= 1 << witness.vertex_map[v]
        w = witness.duplicates.get(v)
        if w is not None:
            t |= 1 << w
    return t


def invert_psi(witness: TranslationWitness, t: int) -> int:
    """Preimage of a target set; fails unless every ``v_i`` and ``w_i`` appear together."""
    witness.target.check(t)
    s = 0
    covered = 0
    for v, tv in enumerate(witness.vertex_map):
        has_v = t >> tv & 1
        w = witness.duplicates.get(v)
        if w is not None:
            if has_v != (t >> w & 1):
                raise ConsistencyError(
                    f"vertex {witness.source.labels[v]!r} and its duplicate are not paired"
                )
            covered |= 1 << w
        if has_v:
            s |= 1 << v
        covered |= 1 << tv
    if t & ~covered:
        raise ConsistencyError("set contains loop-guard vertices of the translation")
    return s


@dataclass(frozen=True)
class CnfFormula:
    """CNF over variables ``1..num_vars``; literals are signed DIMACS integers."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise InputError("variable count must be non-negative")
        for c in self.clauses:
            if not c:
                raise InputError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InputError(f"literal {lit} out of range")

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        return cls(num_vars, tuple(tuple(c) for c in clauses))

    def satisfied_by(self, assignment: int) -> bool:
        """``assignment`` bit ``i-1`` holds the truth value of variable ``i``."""
        for c in self.clauses:
            if not any((assignment >> (abs(l) - 1) & 1) == (l > 0) for l in c):
                return False
        return True

    def count_models(self) -> int:
        return sum(self.satisfied_by(a) for a in range(1 << self.num_vars))

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or num_vars is not None:
                raise ParseError("bad problem line", lineno)
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("bad problem line", lineno) from None
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise ParseError(f"literal {lit} exceeds variable count", lineno)
            else:
                current.append(lit)
    if num_vars is None:
        raise ParseError("missing problem line")
    if current:
        clauses.append(tuple(current))
    if declared is not None and declared != len(clauses):
        raise ParseError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def extended_translate(cnf: CnfFormula) -> ArgumentationFramework:
    """Argumentation framework whose nontrivial admissible sets encode the models.

    Vertex order: ``phi``, the clause vertices (input clauses, then one
    tautology ``z_i or not z_i`` per variable), ``z_1..z_n``, ``-z_1..-z_n``,
    then ``A0, A1, A2``.
    """
    n = cnf.num_vars
    all_clauses = list(cnf.clauses) + [(i, -i) for i in range(1, n + 1)]
    m = len(all_clauses)
    phi = 0
    clause0 = 1
    pos0 = clause0 + m
    neg0 = pos0 + n
    a0 = neg0 + n

    def lit_vertex(lit: int) -> int:
        return (pos0 if lit > 0 else neg0) + abs(lit) - 1

    labels = ["phi"]
    labels += [f"C{j + 1}" for j in range(m)]
    labels += [f"z{i}" for i in range(1, n + 1)]
    labels += [f"-z{i}" for i in range(1, n + 1)]
    labels += ["A0", "A1", "A2"]
    arcs = [(clause0 + j, phi) for j in range(m)]
    for i in range(1, n + 1):
        arcs += [(lit_vertex(i), lit_vertex(-i)), (lit_vertex(-i), lit_vertex(i))]
    for j, c in enumerate(all_clauses):
        arcs += [(lit_vertex(l), clause0 + j) for l in c]
    arcs.append((phi, a0))
    arcs += [(a0, a0 + 1), (a0 + 1, a0 + 2), (a0 + 2, a0)]
    for i in range(1, n + 1):
        arcs += [(a0, lit_vertex(i)), (a0, lit_vertex(-i))]
    return ArgumentationFramework(len(labels), arcs, labels)
