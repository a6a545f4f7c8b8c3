"""Command-line interface.

Subcommands: color, verify, oracle, gen, bench.  Exit codes: 0 success,
1 bound violation or failed verification, 2 malformed input or infeasible
request, 3 internal assertion (a bug in this package, never the input).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from . import io as lio
from .coloring import check_edge_colors
from .engine import color_graph
from .errors import (
    BoundViolationError,
    InputError,
    InternalAssertionError,
    ListColorError,
    NotBipartiteError,
)
from .lists import check_bound, generate_from_bounds
from .oracle import DEFAULT_LIMIT, exhaustive_color

EXIT_OK = 0
EXIT_BOUND = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _resolve_lists(g, file_lists, mode, where: str):
    """Lists for a run: explicit instances carry them, bound modes derive them."""
    if mode == "explicit":
        if file_lists is None:
            raise InputError(f"{where}: explicit mode needs lists in the instance")
        return file_lists
    if file_lists is not None:
        raise InputError(
            f"{where}: instance carries explicit lists; use --mode explicit"
        )
    return generate_from_bounds(g, mode)


def cmd_color(args) -> int:
    g, file_lists = lio.parse_instance(_read(args.instance))
    if args.mode == "explicit" and args.assume_bound is None:
        raise InputError("--mode explicit requires --assume-bound")
    lists = _resolve_lists(g, file_lists, args.mode, args.instance)
    records = []
    sink = records.append if args.trace else None
    phi, stats = color_graph(
        g, lists, args.mode, assume_bound=args.assume_bound, trace=sink
    )
    _write(args.output, lio.write_coloring(phi.color))
    if args.trace:
        text = "".join(lio.format_trace_record(r) + "\n" for r in records)
        _write(args.trace, text)
    if args.stats:
        print(
            f"edges={g.m} happy={stats.happy_steps} content={stats.content_steps}"
            f" fan_shifts={stats.fan_shifts} path_shifts={stats.path_shifts}"
            f" max_chain={stats.max_chain_length}",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    g, file_lists = lio.parse_instance(_read(args.instance))
    colors = lio.parse_coloring(_read(args.coloring), g.m)
    lists = file_lists
    if lists is None and args.mode is not None:
        lists = generate_from_bounds(g, args.mode)
    findings = check_edge_colors(g, lists, colors)
    blanks = sum(1 for c in colors if c is None)
    for f in findings:
        print(f"{f.kind}: {f.detail}", file=sys.stderr)
    if blanks:
        print(f"incomplete: {blanks} edges blank", file=sys.stderr)
    if findings or blanks:
        return EXIT_BOUND
    print(f"ok: {g.m} edges properly colored")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, file_lists = lio.parse_instance(_read(args.instance))
    if file_lists is not None:
        lists = file_lists
    elif args.mode is not None:
        lists = generate_from_bounds(g, args.mode)
    else:
        raise InputError("instance has no lists; pass --mode to derive them")
    colors = exhaustive_color(g, lists, limit=args.limit)
    if colors is None:
        print("no coloring")
        return EXIT_OK
    _write(args.output, lio.write_coloring(colors))
    return EXIT_OK


def cmd_gen(args) -> int:
    g = lio.generate_random(
        args.n,
        args.max_degree,
        args.max_multiplicity,
        bipartite=args.bipartite,
        seed=args.seed,
        edges=args.edges,
    )
    lists = generate_from_bounds(g, args.lists) if args.lists else None
    _write(args.output, lio.write_instance(g, lists))
    return EXIT_OK


def _bench_one(params):
    seed, args = params
    g = lio.generate_random(
        args.n,
        args.max_degree,
        args.max_multiplicity,
        bipartite=args.bipartite or args.mode == "koenig",
        seed=seed,
        edges=args.edges,
    )
    lists = generate_from_bounds(g, args.mode)
    phi, stats = color_graph(g, lists, args.mode)
    if not check_bound(g, lists, args.mode).ok or phi.verify():
        raise InternalAssertionError(f"bench seed {seed} produced a bad run")
    return seed, g.m, stats


def cmd_bench(args) -> int:
    jobs = [(args.seed_base + i, args) for i in range(args.seeds)]
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(_bench_one, jobs))
    total_edges = total_content = 0
    max_chain = 0
    for seed, m, stats in results:
        total_edges += m
        total_content += stats.content_steps
        max_chain = max(max_chain, stats.max_chain_length)
        print(
            f"seed={seed} edges={m} happy={stats.happy_steps}"
            f" content={stats.content_steps} max_chain={stats.max_chain_length}"
        )
    print(
        f"total: runs={len(results)} edges={total_edges}"
        f" content={total_content} max_chain={max_chain}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listcolor",
        description="Proper list edge-coloring of loopless multigraphs "
        "under local list-size guarantees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color an instance")
    p.add_argument("instance")
    p.add_argument("--mode", required=True,
                   choices=["shannon", "vizing", "koenig", "explicit"])
    p.add_argument("--assume-bound", choices=["shannon", "vizing", "koenig"],
                   help="guarantee the explicit lists satisfy")
    p.add_argument("--trace", help="write per-shift trace records to this file")
    p.add_argument("--stats", action="store_true", help="print run counters to stderr")
    p.add_argument("-o", "--output", help="coloring output file (default stdout)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against an instance")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.add_argument("--mode", choices=["shannon", "vizing", "koenig"],
                   help="derive bound lists when the instance has none")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive search on a small instance")
    p.add_argument("instance")
    p.add_argument("--mode", choices=["shannon", "vizing", "koenig"],
                   help="derive bound lists when the instance has none")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                   help=f"edge-count cap (default {DEFAULT_LIMIT})")
    p.add_argument("-o", "--output", help="coloring output file (default stdout)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-multiplicity", type=int, default=1)
    p.add_argument("--edges", type=int, help="target edge count")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lists", choices=["shannon", "vizing", "koenig"],
                   help="embed bound-derived lists as explicit lists")
    p.add_argument("-o", "--output", help="instance output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="color many seeded random instances")
    p.add_argument("--seeds", type=int, required=True, help="number of runs")
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--mode", default="vizing",
                   choices=["shannon", "vizing", "koenig"])
    p.add_argument("-n", type=int, default=24)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--max-multiplicity", type=int, default=2)
    p.add_argument("--edges", type=int)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BoundViolationError, NotBipartiteError) as exc:
        print(f"bound violation: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InternalAssertionError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ListColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
