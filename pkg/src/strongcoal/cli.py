"""Command-line entry point: ``strongcoal {solve,table,verify,scg,check-bounds}``.

Exit codes: 0 success / valid, 1 invalid input or failed verification,
2 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import config
from .coalition import (
    Partition,
    PartitionError,
    coalition_partner_count,
    construct_from_domatic,
    solve,
    validate_partition,
)
from .config import CapacityError
from .domination import PLAIN, STRONG, as_style, count_all_sds, domatic
from .families import c_oracle, family_f_member, sc_oracle
from .graph import GraphParseError, degree_stats, from_spec, parse_edge_list, sample_graphs
from .scg import InvalidPartitionError, build_scg, export_dot

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2


def load_graph(args):
    if args.gen:
        return args.gen, from_spec(args.gen)
    return args.graph, parse_edge_list(Path(args.graph).read_text())


def parse_partition_text(text: str, n: int) -> Partition:
    """One block per line of 1-based ids, or a ``solve --json`` record."""
    stripped = text.strip()
    if stripped.startswith("{"):
        blocks = json.loads(stripped)["witness"]
        if blocks is None:
            raise PartitionError("record has no witness")
    else:
        blocks = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                blocks.append([int(t) for t in line.replace(",", " ").split()])
            except ValueError:
                raise PartitionError(f"line {lineno}: non-integer vertex id") from None
    return Partition.from_lists(n, [[v - 1 for v in b] for b in blocks])


def record(name, result):
    return {
        "graph": name,
        "style": result.style,
        "value": result.value,
        "witness": result.witness.one_based() if result.witness else None,
        "certified": result.certified,
        "nodes_explored": result.nodes_explored,
        "elapsed_ms": round(result.wall_time * 1000, 3),
    }


# -- subcommands -------------------------------------------------------------------


def cmd_solve(args):
    name, g = load_graph(args)
    res = solve(g, args.style, workers=args.workers, max_order=args.max_order)
    if args.json:
        print(json.dumps(record(name, res)))
        return EXIT_OK
    bounds = ", ".join(f"{b.name}={b.value}" for b in res.bounds if b.value is not None)
    print(f"graph      {name} (n={g.n}, m={g.m})")
    print(f"style      {res.style}")
    print(f"value      {res.value}")
    print(f"certified  {res.certified} ({res.certificate})")
    print(f"bounds     {bounds}")
    print(f"nodes      {res.nodes_explored}")
    print(f"elapsed    {res.wall_time * 1000:.1f} ms")
    if res.witness:
        print("witness")
        for b in res.witness.one_based():
            print(" ".join(map(str, b)))
    return EXIT_OK


def _table_rows(args):
    if args.family == "paths":
        lo = args.min if args.min is not None else 1
        return [("path", (n,)) for n in range(lo, args.max + 1)]
    if args.family == "cycles":
        lo = args.min if args.min is not None else 3
        return [("cycle", (n,)) for n in range(lo, args.max + 1)]
    rmax = args.rmax
    return [("complete_bipartite", (r, s)) for r in range(1, rmax + 1) for s in range(1, r + 1)]


def cmd_table(args):
    style = as_style(args.style)
    if args.family in ("paths", "cycles") and args.max is None:
        raise SystemExit("table: --max is required for paths and cycles")
    if args.family == "complete_bipartite" and args.rmax is None:
        raise SystemExit("table: --rmax is required for complete_bipartite")
    oracle = sc_oracle if style is STRONG else c_oracle
    limit = config.MAX_ORDER if args.max_order is None else args.max_order
    graphs = []
    for family, params in _table_rows(args):
        spec = f"{family}:{','.join(map(str, params))}"
        g = from_spec(spec)
        if g.n > limit:
            raise CapacityError(g.n, limit)
        graphs.append((family, params, spec, g))
    rows = []
    for family, params, spec, g in graphs:
        res = solve(g, style, workers=args.workers, max_order=args.max_order)
        ans = oracle(family, *params)
        match = (res.value == ans.value) if ans.applicable else None
        rows.append((spec, params, res, ans, match))
    if args.json:
        for spec, params, res, ans, match in rows:
            rec = record(spec, res)
            rec.update(oracle=ans.value if ans.applicable else None, match=match)
            print(json.dumps(rec))
    else:
        label = "SC" if style is STRONG else "C"
        print(f"{'param':>8}  {label:>3}  {'oracle':>6}  match")
        for spec, params, res, ans, match in rows:
            p = ",".join(map(str, params))
            o = str(ans.value) if ans.applicable else "-"
            m = {True: "yes", False: "NO", None: "n/a"}[match]
            print(f"{p:>8}  {res.value:>3}  {o:>6}  {m}")
    return EXIT_OK if all(r[4] is not False for r in rows) else EXIT_INVALID


def cmd_verify(args):
    name, g = load_graph(args)
    p = parse_partition_text(Path(args.partition).read_text(), g.n)
    valid, verdicts = validate_partition(g, p, args.style)
    if args.json:
        print(json.dumps({
            "graph": name,
            "style": str(as_style(args.style)),
            "valid": valid,
            "blocks": [
                {"block": v.block_index + 1, "members": p.blocks[v.block_index].one_based(),
                 "status": v.status.value, "partners": [j + 1 for j in v.partners]}
                for v in verdicts
            ],
        }))
    else:
        for v in verdicts:
            members = ",".join(map(str, p.blocks[v.block_index].one_based()))
            partners = ",".join(f"V{j + 1}" for j in v.partners) or "-"
            print(f"V{v.block_index + 1}={{{members}}}  {v.status.value}  partners: {partners}")
        print(f"{'valid' if valid else 'invalid'} {len(p)}-block partition of {name}")
    return EXIT_OK if valid else EXIT_INVALID


def cmd_scg(args):
    name, g = load_graph(args)
    p = parse_partition_text(Path(args.partition).read_text(), g.n)
    cg = build_scg(g, p, args.style)
    dot = export_dot(cg)
    if args.dot == "-":
        sys.stdout.write(dot)
    else:
        Path(args.dot).write_text(dot)
    print(f"{len(cg.edges)} edges")
    return EXIT_OK


def check_graph_bounds(g, workers=1, max_order=None):
    """Evaluate every applicable bound against the exact value.

    The value used for the checks comes from a search started at the order,
    so no bound being tested has been used to produce it.  Returns a list
    of ``(check, holds, detail, informational)``.
    """
    checks = []
    res = solve(g, STRONG, workers=workers, max_order=max_order, use_bounds=False)
    sc = res.value
    delta, Delta, universal = degree_stats(g)
    bounded = solve(g, STRONG, workers=workers, max_order=max_order)
    checks.append(("bounded_search_agrees", bounded.value == sc, f"{bounded.value} vs {sc}", False))
    if family_f_member(g):
        checks.append(("family_F", sc == 0, f"SC={sc}", False))
    else:
        checks.append(("order", 1 <= sc <= g.n, f"1 <= {sc} <= {g.n}", False))
    checks.append(("K1_iff_one", (sc == 1) == (g.n == 1), f"SC={sc}, n={g.n}", False))
    if sc < 2:
        checks.append(("below_two_has_universal", bool(universal), f"SC={sc}", False))
    if not universal and g.n >= 2:
        dst, _ = domatic(g, STRONG)
        built = construct_from_domatic(g)
        ok, _ = validate_partition(g, built, STRONG)
        checks.append(("at_least_two", sc >= 2, f"SC={sc}", False))
        checks.append(("twice_domatic", sc >= 2 * dst, f"{sc} >= 2*{dst}", False))
        checks.append(("construction", ok and len(built) >= 2 * dst, f"{len(built)} blocks from d_st={dst}", False))
    if res.witness is not None:
        worst = max(coalition_partner_count(g, res.witness, i, STRONG) for i in range(len(res.witness)))
        checks.append(("partners_le_Delta_plus_1", worst <= Delta + 1, f"max partners {worst}, Delta={Delta}", False))
    if delta == 1:
        checks.append(("delta2", sc <= 2 + 2 * Delta, f"{sc} <= {2 + 2 * Delta}", False))
    if g.n >= 2 and Delta <= g.n - 2 and g.degrees.count(Delta) == 1 and g.n <= config.SCAN_MAX_ORDER:
        r = count_all_sds(g, STRONG, limit=config.SCAN_MAX_ORDER)
        checks.append(("sds_count", sc <= r + 1, f"{sc} <= {r}+1", True))
    if g.is_regular():
        c = solve(g, PLAIN, workers=workers, max_order=max_order).value
        checks.append(("regular_equal", sc == c, f"SC={sc}, C={c}", False))
    return res, checks


def cmd_check_bounds(args):
    if args.random is not None:
        if args.seed is None:
            raise SystemExit("check-bounds: --seed is required with --random")
        graphs = sample_graphs(
            args.random, args.n, p=args.p, seed=args.seed,
            connected=args.connected, no_universal=args.no_universal,
        )
        named = [(f"gnp:{args.n},{args.p},seed={args.seed}#{i}", g) for i, g in enumerate(graphs)]
    else:
        named = [load_graph(args)]
    violations = 0
    for name, g in named:
        res, checks = check_graph_bounds(g, args.workers, args.max_order)
        bad = [c for c in checks if not c[1] and not c[3]]
        violations += len(bad)
        if args.json:
            rec = record(name, res)
            rec["checks"] = [{"check": c, "holds": h, "detail": d, "informational": i} for c, h, d, i in checks]
            print(json.dumps(rec))
        else:
            print(f"{name}: SC={res.value}")
            for c, h, d, info in checks:
                mark = "ok" if h else ("info" if info else "VIOLATED")
                print(f"  {c:<26} {mark:<8} {d}")
    if not args.json:
        print(f"{len(named)} graph(s), {violations} violation(s)")
    return EXIT_OK if violations == 0 else EXIT_INVALID


# -- parser ------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="strongcoal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True, graph_required=True):
        if graph:
            src = p.add_mutually_exclusive_group(required=graph_required)
            src.add_argument("--graph", help="edge-list file")
            src.add_argument("--gen", help="generator spec, e.g. path:9 or complete_bipartite:4,3")
        p.add_argument("--style", choices=["plain", "strong"], default="strong")
        p.add_argument("--json", action="store_true", help="one JSON record per graph")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--max-order", type=int, default=None, help=f"exact limit (default {config.MAX_ORDER})")

    p = sub.add_parser("solve", help="exact coalition number with witness")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="solver vs closed form for a family")
    p.add_argument("family", choices=["paths", "cycles", "complete_bipartite"])
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--rmax", type=int)
    common(p, graph=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a partition file")
    p.add_argument("partition")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scg", help="coalition graph of a partition as DOT")
    p.add_argument("--partition", required=True)
    p.add_argument("--dot", default="-", help="output path, '-' for stdout")
    common(p)
    p.set_defaults(func=cmd_scg)

    p = sub.add_parser("check-bounds", help="test the known bounds against exact values")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--no-universal", action="store_true")
    common(p, graph_required=False)
    p.set_defaults(func=cmd_check_bounds)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check-bounds" and args.random is None and not (args.gen or args.graph):
        parser.error("check-bounds needs --gen, --graph or --random")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvalidPartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GraphParseError, PartitionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
