"""Command-line front end.

Exit codes: 0 on success (including reported failures like an
unhamiltonizable input), 1 when a mathematical invariant is violated, 2 on
usage errors.
"""

import argparse
import json
import sys

from . import experiments, factors, graph, hamiltonize, mixing, permanent, spectral
from .errors import NdlError


def _load_graph(path):
    with open(path) as fh:
        return graph.read_edge_list(fh.read())


def _emit(args, payload, csv_rows=None):
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv" and csv_rows is not None:
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    else:
        _print_text(payload)


def _print_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _print_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            _print_text(v, indent)
    else:
        print(f"{pad}{payload}")


def _cmd_gen(args):
    spec = graph.GraphFamilySpec(
        family=args.family,
        q=args.q or 0,
        n=args.n or 0,
        d=args.d or 0,
        connection_set=tuple(args.connection_set or ()),
        seed=args.seed,
    )
    g = graph.generate(spec)
    text = graph.write_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_certify(args):
    cert = spectral.certify(_load_graph(args.input), args.epsilon)
    d = cert.to_json_dict()
    _emit(args, d, csv_rows=[d.keys(), [d[k] for k in d]])
    return 0


def _cmd_mixing(args):
    g = _load_graph(args.input)
    cert = spectral.certify(g, args.epsilon)
    rep = mixing.verify_mixing(g, cert, sample_count=args.samples, seed=args.seed)
    _emit(args, rep.to_json_dict())
    return 1 if rep.violations else 0


def _cmd_permanent(args):
    g = _load_graph(args.input)
    per = permanent.permanent_exact(permanent.adjacency_matrix_of(g))
    payload = {"permanent": str(per), "bregman_upper": permanent.bregman_bound(g.degrees).to_json_dict()}
    if g.is_regular() and g.n >= 1:
        d = g.degree(0)
        payload["vdw_lower"] = permanent.vdw_lower(g.n, d).to_json_dict()
        payload["regular_upper"] = permanent.regular_upper(g.n, d).to_json_dict()
    _emit(args, payload)
    return 0


def _cmd_count(args):
    g = _load_graph(args.input)
    if args.what == "hamilton":
        payload = {"hamilton_cycles": str(factors.hamilton_count_exact(g))}
        csv_rows = [["hamilton_cycles"], [payload["hamilton_cycles"]]]
    elif args.what == "matchings":
        payload = {"perfect_matchings": str(factors.perfect_matching_count(g))}
        csv_rows = [["perfect_matchings"], [payload["perfect_matchings"]]]
    else:  # factors
        hist = factors.factor_histogram(g)
        payload = hist.to_json_dict()
        csv_rows = [["s", "count"]] + [
            [s, c] for s, c in sorted(hist.counts.items())
        ]
    _emit(args, payload, csv_rows=csv_rows)
    return 0


def _cmd_phi(args):
    g = _load_graph(args.input)
    _emit(args, {"k": args.k, "phi": str(factors.phi(g, args.k))})
    return 0


def _cmd_hamiltonize(args):
    import random

    g = _load_graph(args.input)
    cert = spectral.certify(g, args.epsilon)
    all_factors = factors.enumerate_two_factors(g)
    if not all_factors:
        _emit(args, {"error": "graph has no 2-factor"})
        return 0
    rng = random.Random(args.factor_seed)
    f = all_factors[rng.randrange(len(all_factors))]
    trace = hamiltonize.two_factor_to_hamilton(g, f, cert, args.budget_constant)
    if trace.success:
        hamiltonize.replay(g, f, trace)
    payload = trace.to_json_dict()
    payload["two_factor"] = [list(c) for c in f.components]
    _emit(args, payload)
    return 0


def _cmd_report(args):
    rep = experiments.bounds_report(_load_graph(args.input), args.epsilon)
    d = rep.to_json_dict()
    csv_rows = [["bound", "value"]] + [[k, v] for k, v in rep.bounds.items()]
    _emit(args, d, csv_rows=csv_rows)
    return 0 if rep.all_ok else 1


def _cmd_tail(args):
    diag = experiments.tail_diagnostics(_load_graph(args.input))
    _emit(args, diag.to_json_dict())
    return 0


def _cmd_experiment(args):
    if args.kind == "gnp":
        value = experiments.janson_expectation_gnp(args.n, args.p)
        payload = {"log_expectation": value}
    elif args.kind == "gnm":
        value, is_zero = experiments.janson_expectation_gnm(args.n, args.m)
        payload = {"log_expectation": None if is_zero else value, "is_zero": is_zero}
    elif args.kind == "mc":
        payload = experiments.monte_carlo_gnp(args.n, args.p, args.trials, args.seed)
    else:  # trend
        payload = experiments.theorem_trend(seed=args.seed)
    _emit(args, payload)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ndlham",
        description="certify pseudo-random regular graphs and verify "
        "Hamilton-cycle counting identities exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, epsilon=True):
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")
        if epsilon:
            p.add_argument("--epsilon", type=float, default=0.1)

    p = sub.add_parser("gen", help="generate a family graph as an edge list")
    p.add_argument("--family", required=True,
                   choices=["paley", "random-regular", "complete", "cycle", "petersen", "circulant"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--connection-set", dest="connection_set", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("certify", help="spectral (n,d,lambda) certificate")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("mixing", help="verify the mixing inequality on sampled pairs")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_mixing)

    p = sub.add_parser("permanent", help="exact adjacency permanent and bounds")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_permanent)

    p = sub.add_parser("count", help="exact Hamilton/matching/2-factor counts")
    p.add_argument("what", choices=["hamilton", "matchings", "factors"])
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("phi", help="max 2-factor count over induced k-subgraphs")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("hamiltonize", help="convert a random 2-factor to a Hamilton cycle")
    p.add_argument("input")
    p.add_argument("--factor-seed", dest="factor_seed", type=int, default=0)
    p.add_argument("--budget-constant", dest="budget_constant", type=float, default=10.0)
    common(p)
    p.set_defaults(func=_cmd_hamiltonize)

    p = sub.add_parser("report", help="exact counts against every bound")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("tail", help="cycle-count tail diagnostics")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=_cmd_tail)

    p = sub.add_parser("experiment", help="random-graph expectation baselines")
    p.add_argument("kind", choices=["gnp", "gnm", "mc", "trend"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    common(p, epsilon=False)
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NdlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
