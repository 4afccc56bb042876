"""Command-line interface.

Exit codes: ``solve`` returns 0 (isomorphic), 1 (non-isomorphic) or
3 (node budget exhausted); every command returns 2 on bad input.

Graph arguments are file paths, ``-`` for stdin, or ``gen:SPEC`` to build a
family graph inline (e.g. ``gen:petersen``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .bench import (DEFAULT_BASELINE_BUDGET, DEFAULT_FAMILIES, DEFAULT_SEEDS,
                    DEFAULT_SIZES, run_bench, seeded, write_csv)
from .errors import WalkisoError
from .extension import extend_sequence
from .families import generate, parse_family
from .formats import FORMATS, normalize_format, parse, read_file, sniff_format, write
from .graph import Graph, Permutation, permute
from .solver import DEFAULT_NODE_BUDGET, SolveConfig, Status, solve

EXIT_CODES = {Status.ISOMORPHIC: 0, Status.NON_ISOMORPHIC: 1, Status.EXHAUSTED: 3}
EXIT_BAD_INPUT = 2


class UsageError(Exception):
    pass


def load_graph(arg: str, fmt: str | None) -> Graph:
    if arg.startswith("gen:"):
        return generate(arg[4:])
    if arg == "-":
        data = sys.stdin.buffer.read()
        return parse(data, fmt or sniff_format(data), source_name="stdin").graph
    try:
        return read_file(arg, fmt).graph
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror or exc}") from None


def _emit(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out and out != "-":
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_extend(args) -> int:
    g = load_graph(args.input, args.format)
    levels = extend_sequence(g, args.alpha)
    chosen = levels if args.all_levels else levels[-1:]
    if args.json:
        doc = {"order": g.order,
               "levels": [{"level": m.level, "entries": m.entries.tolist()} for m in chosen]}
        _emit(json.dumps(doc) + "\n", args.out)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for m in chosen:
        if args.all_levels:
            buf.write(f"# level {m.level}\n")
        w.writerows(m.entries.tolist())
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_solve(args) -> int:
    g = load_graph(args.first, args.format)
    h = load_graph(args.second, args.format)
    cfg = SolveConfig(alpha_max=args.alpha_max, stall=args.stall, node_budget=args.budget,
                      use_forbidden=not args.no_forbidden, multiset=not args.set_rows)
    v = solve(g, h, cfg)
    if args.json:
        print(json.dumps(v.to_dict()))
    else:
        print(v.status.value)
        if v.mapping is not None:
            for i, j in enumerate(v.mapping):
                print(f"{i} -> {j}")
        s = v.stats
        print(f"# levels={s.levels} f_density={s.f_density:.6f} "
              f"unique_candidate_fraction={s.unique_candidate_fraction:.6f} "
              f"nodes={s.nodes} extension_ms={s.extension_ms:.3f} "
              f"search_ms={s.search_ms:.3f}", file=sys.stderr)
    return EXIT_CODES[v.status]


def cmd_gen(args) -> int:
    spec = parse_family(args.family)
    if args.seed is not None:
        spec = seeded(spec, args.seed)
    g = generate(spec)
    if args.permute is not None:
        g = permute(g, Permutation.random(g.order, args.permute))
    _emit(write(g, args.format or "graph6"), args.out)
    return 0


def cmd_convert(args) -> int:
    g = load_graph(args.input, args.format)
    _emit(write(g, args.to), args.out)
    return 0


def cmd_bench(args) -> int:
    families = args.family or list(DEFAULT_FAMILIES)
    sizes = _int_list(args.sizes) if args.sizes else list(DEFAULT_SIZES)
    if args.seeds:
        seeds = _int_list(args.seeds)
    elif args.seed is not None:
        seeds = [args.seed]
    else:
        seeds = list(DEFAULT_SEEDS)
    cfg = SolveConfig(alpha_max=args.alpha_max, stall=args.stall, node_budget=args.budget)
    budget = None if args.no_baseline else args.baseline_budget
    records = run_bench(families, sizes, seeds, cfg, budget, distinct=args.distinct)
    buf = io.StringIO()
    write_csv(records, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def _fmt(value: str) -> str:
    try:
        return normalize_format(value)
    except WalkisoError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", type=_fmt, default=None, metavar="{" + "|".join(FORMATS) + "}",
                        help="graph file format (default: guess from suffix/content)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="walkiso", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=f"walkiso {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("extend", parents=[common], help="print walk-count matrices")
    e.add_argument("input")
    e.add_argument("--alpha", type=int, default=2)
    e.add_argument("--all-levels", action="store_true", help="emit levels 1..alpha, not just the last")
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_extend)

    s = sub.add_parser("solve", parents=[common], help="decide isomorphism of two graphs")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--alpha-max", type=int, default=None)
    s.add_argument("--stall", type=int, default=2)
    s.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    s.add_argument("--no-forbidden", action="store_true", help="search without F pruning (baseline)")
    s.add_argument("--set-rows", action="store_true", help="compare rows as sets, not multisets")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", parents=[common], help="run the benchmark suite, write CSV")
    b.add_argument("--family", action="append", help="family template, repeatable; 'A vs B' pairs two graphs")
    b.add_argument("--families", dest="family", action="append", help=argparse.SUPPRESS)
    b.add_argument("--sizes", default=None, help="comma list, e.g. 10,20,50")
    b.add_argument("--seeds", default=None, help="comma list or ranges, e.g. 0-19")
    b.add_argument("--alpha-max", type=int, default=None)
    b.add_argument("--stall", type=int, default=2)
    b.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    b.add_argument("--baseline-budget", type=int, default=DEFAULT_BASELINE_BUDGET)
    b.add_argument("--no-baseline", action="store_true")
    b.add_argument("--distinct", action="store_true",
                   help="also compare random families against a second draw")
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", parents=[common], help="write a generated family graph")
    g.add_argument("family")
    g.add_argument("--permute", type=int, default=None, metavar="SEED",
                   help="relabel vertices by a random permutation")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("convert", parents=[common], help="transcode between formats")
    c.add_argument("input")
    c.add_argument("--to", type=_fmt, required=True)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (WalkisoError, UsageError, ValueError) as exc:
        print(f"walkiso: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
