"""Command line front end.

Subcommands: reach, decompose, csg, verify, gen.  Results are printed as
deterministic JSON (sorted keys) or DOT on stdout; timing lines go to
stderr so that identical invocations produce byte-identical stdout.

Exit codes: 0 = YES / success, 1 = NO, 2 = input error, 3 = budget
exceeded, 4 = verification mismatch.
"""

import argparse
import io
import sys
import time

from .csg import (
    NodeBudget,
    csg_over_decomposition,
    csg_reachable,
    default_budget,
    evaluate_decomposition,
)
from .errors import BudgetExceededError, RecolorError, InputError, PreconditionError
from .essential import fast_reachability_report
from .generators import (
    gen_interval_colorings,
    gen_interval_family,
    gen_quadratic_family,
    gen_random_connected_chordal,
    gen_star_blowup,
    star_gadget,
)
from .graph import Coloring, Graph, dump_json, is_proper_coloring, load_json
from .oracle import (
    contract_solution_graph,
    enumerate_solution_graph,
    label_components,
    labeled_isomorphic,
    oracle_reachable,
    verify_csg_certificate,
)
from .treedecomp import (
    build_chordal_nice_td,
    build_generic_nice_td,
    td_size_budget,
)
from .csg import CSG

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _load_graph(path):
    return Graph.from_json(load_json(path))


def _load_coloring(path, g, k):
    c = Coloring.from_json(load_json(path))
    if c.k != k:
        raise InputError(f"coloring in {path} uses k={c.k}, expected {k}")
    if set(c.domain()) != set(range(g.n)):
        raise InputError(f"coloring in {path} does not cover all {g.n} vertices")
    if not is_proper_coloring(g, c):
        raise InputError(f"coloring in {path} is not proper on the graph")
    return c


def _parse_vertex_list(raw, g):
    """Comma separated vertex ids; empty string means the empty set."""
    if raw == "":
        return ()
    try:
        vs = tuple(sorted(int(tok) for tok in raw.split(",")))
    except ValueError as exc:
        raise InputError(f"bad vertex list {raw!r}") from exc
    for v in vs:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range 0..{g.n - 1}")
    if len(set(vs)) != len(vs):
        raise InputError(f"repeated vertex in {raw!r}")
    return vs


def _budget_from(args):
    if getattr(args, "budget", None) is not None:
        if args.budget <= 0:
            raise InputError("--budget must be positive")
        return NodeBudget(args.budget)
    return default_budget()


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj, out_path):
    buf = io.StringIO()
    dump_json(obj, buf)
    _emit(buf.getvalue(), out_path)


def cmd_reach(args):
    g = _load_graph(args.graph)
    alpha = _load_coloring(args.alpha, g, args.k)
    beta = _load_coloring(args.beta, g, args.k)
    budget = _budget_from(args)

    counters = {
        "csg_nodes_peak": None,
        "decomposition_nodes": None,
        "path_weight_peak": None,
        "solution_graph_nodes": None,
    }
    early_stop = False
    if args.mode == "fast":
        rep = fast_reachability_report(g, args.k, alpha, beta)
        answer = rep.answer
        early_stop = rep.early_stop
        counters["decomposition_nodes"] = rep.td_nodes
        counters["path_weight_peak"] = rep.peak_weight
    elif args.mode == "generic":
        td = build_generic_nice_td(g)
        root = csg_over_decomposition(g, td, args.k, alpha, beta, budget=budget)
        answer = csg_reachable(root)
        counters["decomposition_nodes"] = len(td)
        counters["csg_nodes_peak"] = root.peak_nodes
    else:  # oracle
        sg = enumerate_solution_graph(g, args.k, budget=budget)
        answer = oracle_reachable(sg, alpha, beta)
        counters["solution_graph_nodes"] = sg.node_count

    report = {
        "answer": "YES" if answer else "NO",
        "command": "reach",
        "counters": counters,
        "early_stop": early_stop,
        "k": args.k,
        "mode": args.mode,
    }
    _emit_json(report, args.out)
    return EXIT_YES if answer else EXIT_NO


def cmd_decompose(args):
    g = _load_graph(args.graph)
    if args.root_clique == "auto":
        root = None
    else:
        root = _parse_vertex_list(args.root_clique, g)
    td = build_chordal_nice_td(g, root)
    t = len(td.nodes[td.root].bag)
    bound = td_size_budget(g.n, t, td.width())
    if args.format == "dot":
        _emit(td.to_dot(), args.out)
    else:
        _emit_json(
            {
                "command": "decompose",
                "decomposition": td.to_json(),
                "node_count": len(td),
                "size_budget": bound,
                "width": td.width(),
                "within_budget": len(td) <= bound,
            },
            args.out,
        )
    return EXIT_YES


def cmd_csg(args):
    g = _load_graph(args.graph)
    terms = _parse_vertex_list(args.terminals, g)
    budget = _budget_from(args)
    if (args.alpha is None) != (args.beta is None):
        raise InputError("--alpha and --beta must be given together")
    td = build_generic_nice_td(g, terms)
    if args.alpha is not None:
        alpha = _load_coloring(args.alpha, g, args.k)
        beta = _load_coloring(args.beta, g, args.k)
        csg = csg_over_decomposition(g, td, args.k, alpha, beta, budget=budget)
    else:
        csg, _ = evaluate_decomposition(g, td, args.k, budget=budget)
    if args.format == "dot":
        _emit(csg.to_dot(), args.out)
    else:
        _emit_json(
            {
                "command": "csg",
                "csg": csg.to_json(),
                "decomposition_nodes": len(td),
                "peak_nodes": csg.peak_nodes,
            },
            args.out,
        )
    return EXIT_YES


def _verify_bare_csg(g, k, csg, sg):
    """Property checks for an externally supplied CSG; returns check rows."""
    checks = []
    terms = csg.terminal_order
    ok = True
    for label in csg.labels:
        if len(label) != len(terms) or any(not 1 <= c <= k for c in label):
            ok = False
            break
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                if g.has_edge(terms[i], terms[j]) and label[i] == label[j]:
                    ok = False
        if not ok:
            break
    checks.append({"name": "labels", "ok": ok})
    ok = all(csg.labels[i] != csg.labels[j] for i, j in csg.edges)
    checks.append({"name": "(c)", "ok": ok})
    parts = label_components(sg, terms)
    ref = contract_solution_graph(sg, terms, parts)
    checks.append({"name": "isomorphism", "ok": labeled_isomorphic(csg, ref)})
    return checks


def cmd_verify(args):
    g = _load_graph(args.graph)
    if g.n > args.max_n:
        raise InputError(
            f"graph has {g.n} vertices; oracle battery capped at --max-n {args.max_n}"
        )
    sg = enumerate_solution_graph(g, args.k)
    checks = []

    if args.csg is not None:
        loaded = CSG.from_json(load_json(args.csg))
        if loaded.k != args.k:
            raise InputError(f"CSG in {args.csg} uses k={loaded.k}, expected {args.k}")
        checks.extend(_verify_bare_csg(g, args.k, loaded, sg))
    else:
        # DP vs oracle contraction across a spread of terminal sets
        terminal_sets = [()] + [(v,) for v in range(g.n)]
        if g.n >= 2:
            terminal_sets.append((0, g.n - 1))
        for terms in terminal_sets:
            td = build_generic_nice_td(g, terms)
            csg, _ = evaluate_decomposition(g, td, args.k)
            parts = label_components(sg, terms)
            ref = contract_solution_graph(sg, terms, parts)
            cert = verify_csg_certificate(ref, parts, sg, terms)
            iso = labeled_isomorphic(csg, ref)
            checks.append(
                {
                    "name": f"contraction T={list(terms)}",
                    "ok": bool(cert) and iso,
                }
            )
        # reachability agreement on a few deterministic coloring pairs
        if sg.node_count >= 1:
            idxs = sorted({0, sg.node_count - 1, sg.node_count // 2})
            pairs = [(a, b) for a in idxs for b in idxs if a <= b]
            td = build_generic_nice_td(g)
            for a, b in pairs:
                alpha = Coloring(args.k, dict(enumerate(sg.colorings[a])))
                beta = Coloring(args.k, dict(enumerate(sg.colorings[b])))
                want = oracle_reachable(sg, alpha, beta)
                root = csg_over_decomposition(g, td, args.k, alpha, beta)
                got = csg_reachable(root)
                row = {"name": f"reach {a}->{b}", "ok": want == got}
                try:
                    fast = fast_reachability_report(g, args.k, alpha, beta).answer
                    row["ok"] = row["ok"] and fast == want
                except PreconditionError:
                    pass  # fast path not applicable to this instance
                checks.append(row)

    ok = all(row["ok"] for row in checks)
    _emit_json({"checks": checks, "command": "verify", "ok": ok}, args.out)
    return EXIT_YES if ok else EXIT_MISMATCH


def cmd_gen(args):
    if args.family == "interval":
        obj = gen_interval_family(args.p).to_json()
    elif args.family == "interval-colorings":
        subset = frozenset(int(t) for t in args.subset.split(",")) if args.subset else frozenset()
        obj = gen_interval_colorings(args.p, subset).to_json()
    elif args.family == "quadratic":
        obj = gen_quadratic_family(args.n).to_json()
    elif args.family == "chordal":
        obj = gen_random_connected_chordal(args.n, args.k, seed=args.seed).to_json()
    else:  # blowup
        gadget, hub = star_gadget()
        obj = gen_star_blowup(gadget, hub, args.p).to_json()
    _emit_json(obj, args.out)
    return EXIT_YES


def build_parser():
    parser = argparse.ArgumentParser(
        prog="recolor",
        description="Decide k-recoloring reachability between graph colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reach", help="decide whether beta is reachable from alpha")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("-k", type=int, required=True, help="number of colors")
    p.add_argument("--alpha", required=True, help="start coloring JSON file")
    p.add_argument("--beta", required=True, help="target coloring JSON file")
    p.add_argument("--mode", choices=("fast", "generic", "oracle"), default="generic")
    p.add_argument("--budget", type=int, help="CSG node budget override")
    p.add_argument("--out", help="write stdout payload to this path instead")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("decompose", help="build a chordal nice tree decomposition")
    p.add_argument("graph")
    p.add_argument("--root-clique", default="auto", help="'auto' or comma list of ids")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("csg", help="contracted solution graph over a terminal set")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--terminals", default="", help="comma list of ids (may be empty)")
    p.add_argument("--alpha", help="optional coloring to mark")
    p.add_argument("--beta", help="optional coloring to mark")
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_csg)

    p = sub.add_parser("verify", help="cross-check the DP against the oracle")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=7, help="oracle size cap")
    p.add_argument("--csg", help="check this CSG JSON file instead of the battery")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a named instance family as JSON")
    p.add_argument(
        "family",
        choices=("interval", "interval-colorings", "quadratic", "chordal", "blowup"),
    )
    p.add_argument("-p", type=int, default=8, help="family size parameter")
    p.add_argument("-n", type=int, default=10, help="vertex count parameter")
    p.add_argument("-k", type=int, default=4)
    p.add_argument("--subset", default="", help="interval-colorings: flipped blocks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RecolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        elapsed = (time.perf_counter() - t0) * 1000.0
        print(f"[timing] {args.command}: {elapsed:.1f} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
