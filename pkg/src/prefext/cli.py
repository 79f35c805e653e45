"""Command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a size or time cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dispatch import MODES, dispatch, thresholds_csv
from .errors import InputError, PreconditionError, ResourceLimitError
from .formats import parse
from .framework import ArgumentationFramework
from .generators import generate, parse_generator_arg


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prefext", description="Enumerate preferred extensions.")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="framework file")
    src.add_argument("--generate", metavar="KIND:PARAMS", help="built-in generator, e.g. bidirTriangles:2")
    p.add_argument("--format", choices=("apx", "tgf"), help="input format (default: from the file suffix)")
    p.add_argument("--algorithm", choices=MODES, default="auto")
    p.add_argument("--count-only", action="store_true", help="print the number of extensions")
    p.add_argument("--list", action="store_true", help="print one extension per line")
    p.add_argument("--stats", action="store_true", help="print a JSON run report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mls-family", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--emit-thresholds", action="store_true", help="print the crossover table as CSV")
    p.add_argument("--max-n", type=int, default=200, help="refuse frameworks with more vertices")
    p.add_argument("--time-limit", type=float, default=600.0, help="wall-clock budget in seconds")
    return p


def format_extension(af: ArgumentationFramework, s: int) -> str:
    return "{" + ",".join(sorted(af.names(s))) + "}"


def sort_extensions(af: ArgumentationFramework, found: list[int]) -> list[int]:
    return sorted(found, key=lambda s: (s.bit_count(), sorted(af.names(s))))


def load(args) -> tuple[ArgumentationFramework, str]:
    if args.generate:
        kind, params = parse_generator_arg(args.generate)
        return generate(kind, params, args.seed), args.generate
    if not args.input:
        raise InputError("one of --input or --generate is required")
    path = Path(args.input)
    fmt = args.format or path.suffix.lstrip(".").lower()
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text, fmt), str(path)


def run_cli(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.emit_thresholds:
        out.write(thresholds_csv())
        if not (args.input or args.generate):
            return 0
    try:
        af, name = load(args)
        if af.n > args.max_n:
            raise ResourceLimitError(f"{af.n} vertices exceeds --max-n {args.max_n}")
        report = dispatch(
            af,
            args.algorithm,
            mls_family=args.mls_family,
            seed=args.seed,
            time_limit=args.time_limit,
            instance=name,
        )
    except (InputError, PreconditionError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (ResourceLimitError, RecursionError) as exc:
        err.write(f"resource limit: {exc}\n")
        return 2
    if args.count_only:
        out.write(f"{report.count}\n")
    if args.list or not (args.count_only or args.stats):
        for s in sort_extensions(af, report.extensions):
            out.write(format_extension(af, s) + "\n")
    if args.stats:
        out.write(json.dumps(report.as_dict()) + "\n")
    return 0


def main() -> None:
    sys.exit(run_cli())
