"""Command-line interface: ``mwgraph {check,clusters,compare,gen,info}``.

Exit status is 0 for a connected graph (or plain success), 1 for a graph
that splits into several clusters (or, for ``compare``, a soundness
violation), and 2 for any error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .bruteforce import DEFAULT_PATH_BUDGET, brute_force_partition
from .errors import MwGraphError
from .generate import RANK_PROFILES, random_graph
from .graph import laplacian_rank, topological_components
from .graphfile import dump_graph, load_graph
from .linalg import rank_of
from .oracle import oracle_partition
from .report import compare, sig6, to_json
from .tolerance import TolerancePolicy
from .warshall import FORMS, warshall_run

ALGORITHMS = ("warshall", "brute-force", "oracle")


def _fmt_clusters(part) -> str:
    return " ".join("{" + ",".join(map(str, c)) + "}" for c in part.clusters)


def _emit(args, doc: dict, lines: list[str]):
    if args.json:
        print(to_json({**doc, "tolerances": {"abs": args.tol_abs, "rel": args.tol_rel}}))
    else:
        print("\n".join(lines))


def _run_algorithm(args, g, tol):
    """Returns ``(connected, partition, extra fields)``."""
    if args.algorithm == "oracle":
        res = oracle_partition(g, tol)
        return res.connected, res.partition, {"laplacian_rank": res.rank}
    if args.algorithm == "brute-force":
        res = brute_force_partition(g, not args.no_early_stop, args.path_budget, tol)
        return res.connected, res.partition, {"paths_enumerated": res.paths_enumerated}
    res = warshall_run(g, tol, form=args.form)
    if getattr(args, "dump_m", None):
        _dump_m(Path(args.dump_m), res)
    return res.connected, res.partition, {"steps": res.steps}


def _dump_m(path: Path, res):
    m = res.final
    doc = {"n": m.n, "d": m.d, "steps": res.steps, "tags": m.tag_letters(),
           "matrix": [[sig6(x) for x in row] for row in m.dense()]}
    path.write_text(to_json(doc) + "\n")


def cmd_check(args, tol) -> int:
    g = load_graph(args.graph, tol)
    connected, part, extra = _run_algorithm(args, g, tol)
    verdict = "connected" if connected else "clustering"
    _emit(args, {"algorithm": args.algorithm, "verdict": verdict, **extra}, [verdict])
    return 0 if connected else 1


def cmd_clusters(args, tol) -> int:
    g = load_graph(args.graph, tol)
    connected, part, extra = _run_algorithm(args, g, tol)
    verdict = "connected" if connected else "clustering"
    lines = [f"algorithm: {args.algorithm}", f"verdict: {verdict}",
             f"clusters: {_fmt_clusters(part)}"] + [f"{k}: {v}" for k, v in extra.items()]
    _emit(args, {"algorithm": args.algorithm, "verdict": verdict,
                 "clusters": part.as_lists(), **extra}, lines)
    return 0 if connected else 1


def cmd_compare(args, tol) -> int:
    g = load_graph(args.graph, tol)
    cmp = compare(g, tol, args.path_budget)
    lines = [f"{name}: {_fmt_clusters(p)}" for name, p in cmp.partitions.items()]
    lines += [str(f) for f in cmp.violations + cmp.gaps]
    lines.append(f"{len(cmp.violations)} soundness violation(s), {len(cmp.gaps)} known gap(s)")
    _emit(args, cmp.as_dict(), lines)
    return 1 if cmp.violations else 0


def cmd_gen(args, tol) -> int:
    g = random_graph(args.n, args.d, args.seed, args.edge_prob, args.rank_profile, tol)
    text = dump_graph(g) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_info(args, tol) -> int:
    g = load_graph(args.graph, tol)
    comps = topological_components(g)
    r = laplacian_rank(g, tol)
    edges = [{"u": e.u, "v": e.v, "rank": rank_of(e.weight, tol)} for e in g.edges]
    doc = {"n": g.n, "d": g.d, "m": g.m, "laplacian_rank": r, "connected_rank": g.d * (g.n - 1),
           "components": comps.as_lists(), "edges": edges}
    lines = [f"vertices: {g.n}", f"weight dimension: {g.d}", f"edges: {g.m}",
             f"laplacian rank: {r} (connected needs {g.d * (g.n - 1)})",
             f"topological components: {_fmt_clusters(comps)}"]
    lines += [f"  ({e['u']},{e['v']}) rank {e['rank']}" for e in edges]
    _emit(args, doc, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tol-rel", type=float, default=1e-9, help="relative zero threshold")
    common.add_argument("--tol-abs", type=float, default=1e-12, help="absolute zero threshold")

    p = argparse.ArgumentParser(prog="mwgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_algorithm(sp, default):
        sp.add_argument("graph", help="graph JSON file, or @ex1..@ex4 for a bundled example")
        sp.add_argument("--algorithm", choices=ALGORITHMS, default=default)
        sp.add_argument("--form", choices=FORMS, default="powers", help="closure recurrence (warshall)")
        sp.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET,
                        help="cap on enumerated paths (brute-force)")
        sp.add_argument("--no-early-stop", action="store_true",
                        help="enumerate every path even after a pair is settled (brute-force)")

    sp = sub.add_parser("check", parents=[common], help="connected or clustering")
    with_algorithm(sp, "oracle")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("clusters", parents=[common], help="print the clusters")
    with_algorithm(sp, "warshall")
    sp.add_argument("--dump-m", metavar="PATH", help="write the final closure matrix (warshall)")
    sp.set_defaults(func=cmd_clusters)

    sp = sub.add_parser("compare", parents=[common], help="run all methods and cross-check them")
    sp.add_argument("graph")
    sp.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("gen", parents=[common], help="write a random graph")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--edge-prob", type=float, default=0.5)
    sp.add_argument("--rank-profile", choices=RANK_PROFILES, default="mixed")
    sp.add_argument("-o", "--output", metavar="PATH")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("info", parents=[common], help="summarize a graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_info)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    warnings.simplefilter("always")
    try:
        tol = TolerancePolicy(args.tol_rel, args.tol_abs)
        return args.func(args, tol)
    except (MwGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
