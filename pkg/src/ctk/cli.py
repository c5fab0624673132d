"""Command-line front end.

Subcommands: compute (indices of graphs from edge lists or level
sequences), enumerate (canonical level sequences of degree-capped
trees), extremal (brute-force extreme values with witnesses),
verify (the machine-check suite), construct (named family members as
edge lists).  All output is byte-deterministic for fixed inputs and
flags.  Exit codes: 0 success or all checks passed, 1 verification
counterexample or internal failure, 2 usage, parse, or scale-guard
error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .enumeration import (
    enumerate_trees,
    format_levels,
    parse_levels,
    scale_guard_limit,
    tree_from_levels,
)
from .extremal import (
    FAMILIES,
    brute_force_extremal,
    classify_max_family,
    closed_form,
    construct_family,
)
from .graphs import (
    Graph,
    build_graph,
    connection_numbers,
    degrees,
    is_complete_graph,
    is_path_graph,
    is_star_graph,
)
from .indices import index_report
from .verify import run_suite


def parse_edge_document(text: str) -> Graph | None:
    """Parse an edge-list document: '#' comment lines, an optional
    'n=<count>' header declaring the vertex count, and 'u v' data
    lines.  Returns None for a document with no content lines.
    Errors carry the offending line number."""
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if declared is not None:
                raise ValueError(f"line {lineno}: duplicate n= header")
            try:
                declared = int(line[2:])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: bad vertex count in {line!r}"
                ) from None
            if declared < 0:
                raise ValueError(f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"line {lineno}: expected 'u v', got {raw.strip()!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: non-integer vertex id in {raw.strip()!r}"
            ) from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex id")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        if declared is not None and max(u, v) >= declared:
            raise ValueError(
                f"line {lineno}: vertex id {max(u, v)} exceeds declared n={declared}"
            )
        edges.append((u, v))
    if declared is None and not edges:
        return None
    return build_graph(edges, n=declared)


def serialize_edge_document(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _index_record(g: Graph) -> str:
    rep = index_report(g)
    obj = {
        "n": rep.n,
        "m": rep.m,
        "degrees": list(degrees(g)),
        "tau": list(connection_numbers(g)),
        "m1": rep.m1,
        "m2": rep.m2,
        "zc1star": rep.zc1star,
        "zc1": rep.zc1,
        "zc2": rep.zc2,
        "degree_counts": {
            str(d): c for d, c in sorted(rep.degree_counts.items())
        },
        "degree_edge_counts": {
            f"{a},{b}": c
            for (a, b), c in sorted(rep.degree_edge_counts.items())
        },
        "connection_edge_counts": {
            f"{a},{b}": c
            for (a, b), c in sorted(rep.connection_edge_counts.items())
        },
        "triangle_quadrangle_free": rep.triangle_quadrangle_free,
    }
    return json.dumps(obj)


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_compute(args: argparse.Namespace) -> int:
    text = _read_input(args.file)
    graphs: list[Graph] = []
    if args.format == "edgelist":
        g = parse_edge_document(text)
        if g is not None:
            graphs.append(g)
    else:
        for lineno, raw in enumerate(text.splitlines(), 1):
            if not raw.strip():
                continue
            try:
                graphs.append(tree_from_levels(parse_levels(raw)))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
    for g in graphs:
        print(_index_record(g))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    if args.max_degree < 1:
        raise ValueError(f"--max-degree must be at least 1, got {args.max_degree}")
    limit = scale_guard_limit()
    if args.n > limit and not args.force:
        raise ValueError(
            f"order {args.n} exceeds the scale guard ({limit}); "
            "pass --force or raise CTK_SCALE_GUARD"
        )
    count = 0
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            for code in enumerate_trees(args.n, args.max_degree):
                fh.write(format_levels(code) + "\n")
                count += 1
        print(count)
    else:
        for code in enumerate_trees(args.n, args.max_degree):
            print(format_levels(code))
            count += 1
        print(count, file=sys.stderr)
    return 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    if args.max_degree < 1:
        raise ValueError(f"--max-degree must be at least 1, got {args.max_degree}")
    res = brute_force_extremal(
        args.n, args.objective, args.direction, args.max_degree
    )
    obj = {
        "n": res.n,
        "max_degree": res.max_degree,
        "objective": res.objective,
        "direction": res.direction,
        "value": res.value,
        "witnesses": [format_levels(c) for c in res.witnesses],
    }
    form: int | None = None
    if args.objective == "zc1star":
        if args.direction == "min" and args.n >= 5 and args.max_degree >= 2:
            form = closed_form(args.n, "min_tree")
        elif args.direction == "max" and args.n >= 7 and args.max_degree == 4:
            form = closed_form(args.n, "max_chemical")
    if form is not None:
        obj["closed_form"] = form
        obj["agreement"] = res.value == form
    print(json.dumps(obj))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = None
    if args.checks is not None:
        checks = tuple(t.strip() for t in args.checks.split(",") if t.strip())
    report = run_suite(
        n_max=args.n_max,
        include_random=args.random,
        seed=args.seed,
        checks=checks,
    )
    sys.stdout.write(report.render())
    return 0 if report.all_passed else 1


def _cmd_construct(args: argparse.Namespace) -> int:
    g = construct_family(args.family, args.n)
    ok = {
        "path": is_path_graph,
        "star": is_star_graph,
        "complete": is_complete_graph,
    }
    if args.family in ok:
        verified = ok[args.family](g)
    else:
        verified = classify_max_family(g) == args.family
    if not verified:
        raise RuntimeError(
            f"construction self-check failed for {args.family} n={args.n}"
        )
    sys.stdout.write(serialize_edge_document(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctk",
        description=(
            "Degree- and connection-based topological indices of simple "
            "graphs, exhaustive degree-capped tree enumeration, extremal "
            "search, and a machine-check suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="indices of graphs read from input")
    pc.add_argument(
        "--format",
        choices=("edgelist", "levelseq"),
        default="edgelist",
        help="input format (default edgelist)",
    )
    pc.add_argument(
        "file",
        nargs="?",
        default=None,
        metavar="FILE",
        help="input path; omit or '-' for stdin",
    )
    pc.set_defaults(func=_cmd_compute)

    pe = sub.add_parser(
        "enumerate", help="canonical level sequences of all trees of an order"
    )
    pe.add_argument("--n", type=int, required=True, help="vertex count")
    pe.add_argument(
        "--max-degree",
        type=int,
        default=4,
        dest="max_degree",
        help="degree cap (default 4)",
    )
    pe.add_argument(
        "--force", action="store_true", help="override the scale guard"
    )
    pe.add_argument(
        "-o", "--output", default=None, help="write sequences here; count to stdout"
    )
    pe.set_defaults(func=_cmd_enumerate)

    px = sub.add_parser(
        "extremal", help="brute-force extreme index values with witnesses"
    )
    px.add_argument("--n", type=int, required=True, help="vertex count")
    px.add_argument(
        "--max-degree",
        type=int,
        default=4,
        dest="max_degree",
        help="degree cap (default 4)",
    )
    px.add_argument(
        "--objective",
        choices=("zc1star", "m1", "m2", "zc1", "zc2"),
        required=True,
    )
    px.add_argument("--direction", choices=("min", "max"), required=True)
    px.set_defaults(func=_cmd_extremal)

    pv = sub.add_parser("verify", help="run the machine-check suite")
    pv.add_argument(
        "--n-max", type=int, default=9, dest="n_max", help="largest order (>= 5)"
    )
    pv.add_argument(
        "--checks",
        default=None,
        help="comma-separated subset of check families (default all)",
    )
    pv.add_argument(
        "--random", action="store_true", help="add seeded random connected graphs"
    )
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=_cmd_verify)

    ps = sub.add_parser("construct", help="emit a named family member")
    ps.add_argument("--family", choices=FAMILIES, required=True)
    ps.add_argument("--n", type=int, required=True)
    ps.set_defaults(func=_cmd_construct)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
