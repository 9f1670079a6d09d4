"""Command line entry point: ``wlmotif <command> ...`` with JSON on stdout.

Exit codes: 0 success, 1 usage or input error, 2 guard exceeded,
3 negative verdict (inequivalent graphs, or a failing ``verify`` run).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import config
from .errors import GraphParseError, GuardExceeded, WLMotifError
from .graph import load_graph

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_NEGATIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _frac(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _emit(args, payload) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    out = getattr(args, "output", None) or config.RUNTIME.output
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- commands ---------------------------------------------------------------

def cmd_wl_refine(args):
    from .wl import ColorRegistry, refine_jointly

    G = load_graph(args.graph)
    reg = ColorRegistry(args.k)
    (col,), t = refine_jointly([G], args.k, reg, rounds=args.rounds)
    sizes = {reg.fingerprint(c): n for c, n in col.histogram().items()}
    _emit(args, {
        "k": args.k,
        "round": t,
        "stable": args.rounds is None,
        "classes": len(sizes),
        "class_sizes": dict(sorted(sizes.items())),
        "colors": [
            {"tuple": list(tup), "color": reg.fingerprint(c)} for tup, c in zip(col.tuples(), col.colors)
        ],
    })
    return EXIT_OK


def cmd_wl_equiv(args):
    from .wl import wl_equivalent, wl_equivalent_bounded

    G, H = load_graph(args.left), load_graph(args.right)
    if args.rounds is None:
        eq = wl_equivalent(G, H, args.k)
    else:
        eq = wl_equivalent_bounded(G, H, args.k, args.rounds)
    _emit(args, {"k": args.k, "rounds": args.rounds, "equivalent": eq})
    return EXIT_OK if eq else EXIT_NEGATIVE


def cmd_tw(args):
    from .treewidth import tree_decomposition

    G = load_graph(args.graph)
    td = tree_decomposition(G)
    if args.decomposition:
        with open(args.decomposition, "w") as fh:
            json.dump(td.to_dict(), fh, sort_keys=True, indent=2)
    _emit(args, {"treewidth": td.width, "bags": len(td.bags)})
    return EXIT_OK


def cmd_hom_count(args):
    from .homcount import count_homs, count_homs_bruteforce, count_homs_td

    F, G = load_graph(args.pattern), load_graph(args.graph)
    fn = {"brute": count_homs_bruteforce, "td": count_homs_td, "auto": count_homs}[args.method]
    _emit(args, {"method": args.method, "homs": fn(F, G)})
    return EXIT_OK


def cmd_eta_build(args):
    from .homcount import build_eta_table, default_anchor, eta_sum
    from .wl import ColorRegistry, refine_jointly

    F = load_graph(args.pattern)
    graphs = [load_graph(p) for p in args.graphs]
    reg = ColorRegistry(args.k)
    cols, t = refine_jointly(graphs, args.k, reg)
    anchor = tuple(args.anchor) if args.anchor else default_anchor(F, args.k)
    eta = build_eta_table(F, anchor, graphs, args.k, reg, cols)
    _emit(args, {
        "k": args.k,
        "anchor": list(anchor),
        "round": t,
        "table": dict(sorted((reg.fingerprint(c), v) for c, v in eta.table.items())),
        "sums": [eta_sum(eta, c) for c in cols],
    })
    return EXIT_OK


def _parameter(args):
    from .motif import graphlet_parameter, ind_to_hom, independent_set_parameter, sub_to_hom

    if args.kind in ("sub", "ind"):
        if not args.pattern:
            raise _UsageError(f"--pattern is required for kind {args.kind}")
        H = load_graph(args.pattern)
        return (sub_to_hom if args.kind == "sub" else ind_to_hom)(H)
    if args.k is None:
        raise _UsageError(f"-k is required for kind {args.kind}")
    return (graphlet_parameter if args.kind == "graphlet" else independent_set_parameter)(args.k)


def cmd_motif_support(args):
    gamma = _parameter(args)
    _emit(args, {"kind": args.kind, "support": gamma.to_list()})
    return EXIT_OK


def cmd_wldim(args):
    from .motif import parameter_from_list
    from .wldim import wl_dimension_graphlet, wl_dimension_ind, wl_dimension_parameter, wl_dimension_sub

    if args.which == "graphlet":
        rep = wl_dimension_graphlet(args.k)
    elif args.which == "param":
        with open(args.support) as fh:
            raw = json.load(fh)
        rep = wl_dimension_parameter(parameter_from_list(raw.get("support", raw) if isinstance(raw, dict) else raw))
    else:
        H = load_graph(args.pattern)
        rep = wl_dimension_sub(H) if args.which == "sub" else wl_dimension_ind(H, cross_check=args.cross_check)
    _emit(args, rep.to_dict())
    return EXIT_OK


def cmd_cfi_build(args):
    from .cfi import ccfi, ccfi_twist

    G = load_graph(args.base)
    if args.twist_set is not None:
        cg = ccfi(G, args.twist_set)
    else:
        cg = ccfi_twist(G) if args.twist else ccfi(G)
    _emit(args, cg.to_dict())
    return EXIT_OK


def cmd_cfi_witness(args):
    from .cfi import counterexample_pair
    from .homcount import count_homs
    from .wl import wl_equivalent

    F = load_graph(args.pattern)
    pair = counterexample_pair(F)
    for path, G in ((args.out_left, pair.left), (args.out_right, pair.right)):
        if path:
            with open(path, "w") as fh:
                fh.write(G.to_json(sort_keys=True, indent=2) + "\n")
    a, b = count_homs(F, pair.left), count_homs(F, pair.right)
    eq = wl_equivalent(pair.left, pair.right, pair.k)
    _emit(args, {
        "k": pair.k,
        "equivalent": eq,
        "homs_left": a,
        "homs_right": b,
        "differ": a != b,
        "sizes": [pair.left.n, pair.right.n],
    })
    return EXIT_OK


def cmd_verify(args):
    from .acceptance import run

    results = run(args.criteria, seed=args.seed if args.seed is not None else config.RUNTIME.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit(args, {"results": [r.to_dict() for r in results], "all_passed": all(r.ok for r in results)})
    return EXIT_OK if all(r.ok for r in results) else EXIT_NEGATIVE


class _UsageError(Exception):
    pass


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wlmotif", description=__doc__.splitlines()[0])
    p.add_argument("--config", help=f"JSON run config (default: ${config.CONFIG_ENV})")
    p.add_argument("--output", help="write the JSON result here instead of stdout")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--parallelism", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    wl = sub.add_parser("wl", help="Weisfeiler-Leman refinement").add_subparsers(dest="action", required=True)
    r = wl.add_parser("refine")
    r.add_argument("--graph", required=True)
    r.add_argument("-k", type=int, default=1)
    r.add_argument("--rounds", type=int)
    r.set_defaults(func=cmd_wl_refine)
    e = wl.add_parser("equiv")
    e.add_argument("--left", required=True)
    e.add_argument("--right", required=True)
    e.add_argument("-k", type=int, default=1)
    e.add_argument("--rounds", type=int)
    e.set_defaults(func=cmd_wl_equiv)

    t = sub.add_parser("tw", help="exact treewidth")
    t.add_argument("--graph", required=True)
    t.add_argument("--decomposition", help="write the tree decomposition JSON here")
    t.set_defaults(func=cmd_tw)

    hom = sub.add_parser("hom").add_subparsers(dest="action", required=True)
    h = hom.add_parser("count")
    h.add_argument("--pattern", required=True)
    h.add_argument("--graph", required=True)
    h.add_argument("--method", choices=["brute", "td", "auto"], default="auto")
    h.set_defaults(func=cmd_hom_count)

    eta = sub.add_parser("eta").add_subparsers(dest="action", required=True)
    b = eta.add_parser("build")
    b.add_argument("--pattern", required=True)
    b.add_argument("-k", type=int, default=1)
    b.add_argument("--graphs", nargs="+", required=True)
    b.add_argument("--anchor", type=int, nargs="+")
    b.set_defaults(func=cmd_eta_build)

    motif = sub.add_parser("motif").add_subparsers(dest="action", required=True)
    m = motif.add_parser("support")
    m.add_argument("--kind", choices=["sub", "ind", "graphlet", "is"], required=True)
    m.add_argument("--pattern")
    m.add_argument("-k", type=int)
    m.set_defaults(func=cmd_motif_support)

    wd = sub.add_parser("wldim").add_subparsers(dest="which", required=True)
    for which in ("sub", "ind"):
        w = wd.add_parser(which)
        w.add_argument("--pattern", required=True)
        if which == "ind":
            w.add_argument("--cross-check", action="store_true")
        w.set_defaults(func=cmd_wldim)
    w = wd.add_parser("graphlet")
    w.add_argument("-k", type=int, required=True)
    w.set_defaults(func=cmd_wldim)
    w = wd.add_parser("param")
    w.add_argument("--support", required=True)
    w.set_defaults(func=cmd_wldim)

    cfi = sub.add_parser("cfi").add_subparsers(dest="action", required=True)
    c = cfi.add_parser("build")
    c.add_argument("--base", required=True)
    c.add_argument("--twist", action="store_true")
    c.add_argument("--twist-set", type=int, nargs="*")
    c.set_defaults(func=cmd_cfi_build)
    c = cfi.add_parser("witness")
    c.add_argument("--pattern", required=True)
    c.add_argument("--out-left")
    c.add_argument("--out-right")
    c.set_defaults(func=cmd_cfi_witness)

    v = sub.add_parser("verify", help="run acceptance checks by name or number")
    v.add_argument("criteria", nargs="*")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = config.load_config(args.config)
        if args.seed is not None:
            cfg.seed = args.seed
        if args.parallelism is not None:
            cfg.parallelism = args.parallelism
        cfg.validate()
        config.apply(cfg)
        return args.func(args)
    except GuardExceeded as exc:
        print(f"wlmotif: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (_UsageError, GraphParseError, OSError, KeyError, ValueError, WLMotifError) as exc:
        print(f"wlmotif: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
