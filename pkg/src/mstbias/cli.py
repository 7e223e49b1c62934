"""Command-line harness: ``python -m mstbias <command>``.

Exit codes: 0 success, 1 usage error, 2 instance or guard error.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import io
from .ea import default_budget
from .experiments import (
    estimate_pm,
    fit_beta_model,
    run_replicates,
    runtime_scaling,
    write_records_csv,
)
from .generators import FAMILIES, InstanceSpec
from .graph import InstanceError, UsageError
from .gsemo import run_gsemo
from .mutation import MutationStrategy
from .oracles import exact_pareto_front, weighted_sum_front
from .ranking import write_distribution_csv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _budget(arg, algo, graph):
    if arg in (None, "auto"):
        return default_budget(algo, graph.n, graph.m)
    return int(float(arg))


def cmd_gen(args):
    spec = InstanceSpec(args.family, args.n, weights=args.weights, l=args.l, u=args.u, k=args.k, seed=args.seed)
    io.write_graph(args.out, spec.build())


def cmd_run(args):
    graph = io.read_graph(args.graph)
    budget = _budget(args.budget, args.algo, graph)
    records = run_replicates(graph, args.algo, args.strategy, budget, args.reps, args.seed, args.workers)
    write_records_csv(args.out, records)
    if args.algo == "gsemo" and (args.archive_out or args.trace_out):
        _gsemo_details(args, graph, budget, records)
    ok = sum(r.success for r in records)
    print(f"{ok}/{len(records)} runs succeeded; median iterations {np.median([r.iterations for r in records]):g}")


def _gsemo_details(args, graph, budget, records):
    # Re-run each seed to collect archives and traces; runs are deterministic in their seed.
    import random

    from .experiments import target_front

    front = target_front(graph)
    arch_rows, trace_rows = [], []
    for i, rec in enumerate(records):
        trace = []
        strategy = MutationStrategy.for_graph(graph, args.strategy, rec.seed)
        res = run_gsemo(graph, strategy, budget, front, random.Random(rec.seed), seed=rec.seed, trace=trace)
        for tree, w in sorted(res.extra["archive"].members, key=lambda m: m[1]):
            arch_rows.append([i, w[0], w[1], " ".join(map(str, sorted(tree.edges)))])
        trace_rows += [[i, it, c] for it, c in trace]
    if args.archive_out:
        _write(args.archive_out, ["rep", "w1", "w2", "edge_ids"], arch_rows)
    if args.trace_out:
        _write(args.trace_out, ["rep", "iteration", "covered"], trace_rows)


def _write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def cmd_pareto(args):
    graph = io.read_graph(args.graph)
    if args.method == "exact":
        points = list(exact_pareto_front(graph))
    else:
        points = weighted_sum_front(graph, args.steps).points
    _write(args.out, ["w1", "w2"], [[p[0], p[1]] for p in points])
    print(f"{len(points)} non-dominated points")


def cmd_estimate_pm(args):
    template = InstanceSpec(args.family, args.n, weights=args.weights)
    curve = estimate_pm(template, args.instances, args.seed, args.steps)
    _write(args.out, ["rank", "p_hat", "instances"],
           [[int(r), repr(float(p)), int(c)] for r, p, c in zip(curve.ranks, curve.mean, curve.count)])
    fit = fit_beta_model(curve, args.n)
    print(f"beta={fit.beta:.6g} r2={fit.r_squared:.6g} rmse={fit.rmse:.6g}")


def cmd_fit_beta(args):
    with open(args.inp, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise UsageError("input CSV has no rows")
    col = "p_hat" if "p_hat" in rows[0] else list(rows[0])[-1]
    y = [float(r[col]) for r in rows]
    ranks = [float(r["rank"]) for r in rows] if "rank" in rows[0] else None
    fit = fit_beta_model(y, args.n, ranks)
    print(f"beta={fit.beta:.6g} r2={fit.r_squared:.6g} rmse={fit.rmse:.6g}")


def cmd_scale(args):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    budget = None if args.budget_policy == "auto" else int(float(args.budget_policy))
    res = runtime_scaling(args.algo, args.strategy, args.family, sizes, args.reps, args.seed, budget, args.workers)
    write_records_csv(args.out, res.records)
    if args.summary_out:
        keys = ["n", "runs", "successes", "success_rate", "median", "q1", "q3", "included"]
        _write(args.summary_out, keys, [[st[k] for k in keys] for st in res.stats])
    for st in res.stats:
        flag = "" if st["included"] else "  (excluded: success rate < 50%)"
        print(f"n={st['n']:<5d} success={st['successes']}/{st['runs']} median={st['median']:g}{flag}")
    print(f"alpha={res.alpha:.4f} intercept={res.intercept:.4f}")


def cmd_dist(args):
    graph = io.read_graph(args.graph)
    strategy = MutationStrategy.for_graph(graph, args.strategy, args.seed)
    dist = strategy.biased if strategy.biased is not None else strategy.uniform
    write_distribution_csv(args.out, dist)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mstbias", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--weights", default="rndrnd", choices=("rndrnd", "eucrnd"))
    g.add_argument("--l", type=int)
    g.add_argument("--u", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("run", help="repeated (1+1) EA or GSEMO runs on a graph file")
    r.add_argument("--algo", required=True, choices=("ea", "gsemo"))
    r.add_argument("--strategy", required=True, choices=("um", "bm", "mm"))
    r.add_argument("--graph", required=True)
    r.add_argument("--budget", default="auto")
    r.add_argument("--reps", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--out", required=True)
    r.add_argument("--archive-out")
    r.add_argument("--trace-out")
    r.set_defaults(func=cmd_run)

    pa = sub.add_parser("pareto", help="exact or weighted-sum Pareto front")
    pa.add_argument("--graph", required=True)
    pa.add_argument("--method", choices=("exact", "wsum"), default="exact")
    pa.add_argument("--steps", type=int, default=1000)
    pa.add_argument("--out", required=True)
    pa.set_defaults(func=cmd_pareto)

    e = sub.add_parser("estimate-pm", help="empirical p^m(r) over random instances")
    e.add_argument("--family", required=True, choices=("ceg", "deg"))
    e.add_argument("--weights", default="rndrnd", choices=("rndrnd", "eucrnd"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--instances", type=int, default=100)
    e.add_argument("--steps", type=int, default=1000)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_estimate_pm)

    f = sub.add_parser("fit-beta", help="fit beta*((n-1)/n)^r to a p_hat CSV")
    f.add_argument("--in", dest="inp", required=True)
    f.add_argument("--n", type=int, required=True)
    f.set_defaults(func=cmd_fit_beta)

    s = sub.add_parser("scale", help="runtime scaling over several n")
    s.add_argument("--algo", required=True, choices=("ea", "gsemo"))
    s.add_argument("--strategy", required=True, choices=("um", "bm", "mm"))
    s.add_argument("--family", required=True, choices=("g1", "g2", "lollipop", "g1m", "g2m"))
    s.add_argument("--sizes", required=True)
    s.add_argument("--reps", type=int, default=50)
    s.add_argument("--budget-policy", default="auto")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", required=True)
    s.add_argument("--summary-out")
    s.set_defaults(func=cmd_scale)

    d = sub.add_parser("dist", help="export edge ranks and selection probabilities")
    d.add_argument("--graph", required=True)
    d.add_argument("--strategy", choices=("um", "bm"), default="bm")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_dist)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except InstanceError as exc:
        print(f"instance error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
