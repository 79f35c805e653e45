"""ICCMA exchange formats: apx (``arg(a).`` / ``att(a,b).``) and tgf."""

from __future__ import annotations

import re

from .errors import InputError, ParseError, SemanticError
from .framework import ArgumentationFramework

_APX_STMT = re.compile(r"\s*(arg|att)\s*\(([^()]*)\)\s*\.")
_NAME = re.compile(r"[^\s(),.%#]+")


def _apx_name(tok: str, lineno: int) -> str:
    tok = tok.strip()
    if not _NAME.fullmatch(tok):
        raise ParseError(f"bad argument name {tok!r}", lineno)
    return tok


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse apx; several statements may share a line and ``%`` starts a comment."""
    labels: list[str] = []
    seen: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if not line[pos:].strip():
                break
            m = _APX_STMT.match(line, pos)
            if m is None:
                raise ParseError(f"cannot parse {line[pos:].strip()!r}", lineno)
            kind, body = m.group(1), m.group(2)
            if kind == "arg":
                name = _apx_name(body, lineno)
                if name not in seen:
                    seen.add(name)
                    labels.append(name)
            else:
                parts = body.split(",")
                if len(parts) != 2:
                    raise ParseError("att needs exactly two arguments", lineno)
                attacks.append((_apx_name(parts[0], lineno), _apx_name(parts[1], lineno), lineno))
            pos = m.end()
    index = {lab: i for i, lab in enumerate(labels)}
    arcs = []
    for a, b, lineno in attacks:
        for name in (a, b):
            if name not in index:
                raise SemanticError(f"line {lineno}: attack references undeclared argument {name!r}")
        arcs.append((index[a], index[b]))
    return ArgumentationFramework(len(labels), arcs, labels)


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse tgf: ``ID [label]`` lines, a ``#`` line, then ``A B [edge label]`` lines.

    A vertex is named by its label when one is given, otherwise by its id.
    """
    ids: dict[str, int] = {}
    labels: list[str] = []
    arcs: list[tuple[int, int]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        parts = line.split(None, 1)
        if not in_edges:
            vid = parts[0]
            if vid in ids:
                continue
            ids[vid] = len(labels)
            labels.append(parts[1].strip() if len(parts) > 1 else vid)
        else:
            ends = line.split()
            if len(ends) < 2:
                raise ParseError("edge line needs two vertex ids", lineno)
            for e in ends[:2]:
                if e not in ids:
                    raise SemanticError(f"line {lineno}: edge references undeclared vertex {e!r}")
            arcs.append((ids[ends[0]], ids[ends[1]]))
    try:
        return ArgumentationFramework(len(labels), arcs, labels)
    except InputError as exc:
        raise SemanticError(str(exc)) from None


def to_apx(af: ArgumentationFramework) -> str:
    for lab in af.labels:
        if not _NAME.fullmatch(lab):
            raise InputError(f"label {lab!r} cannot be written as apx")
    lines = [f"arg({lab})." for lab in af.labels]
    lines += [f"att({af.labels[u]},{af.labels[v]})." for u, v in af.arcs]
    return "\n".join(lines) + "\n"


def to_tgf(af: ArgumentationFramework) -> str:
    """Vertex ids are ``1..n``; the label follows when it differs from the id."""
    lines = []
    for i, lab in enumerate(af.labels, 1):
        lines.append(str(i) if lab == str(i) else f"{i} {lab}")
    lines.append("#")
    lines += [f"{u + 1} {v + 1}" for u, v in af.arcs]
    return "\n".join(lines) + "\n"


def parse(text: str, fmt: str) -> ArgumentationFramework:
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise InputError(f"unknown format {fmt!r}")
