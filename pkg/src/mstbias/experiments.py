"""Share / p^m(r) estimation, the beta regression, and runtime-scaling runs."""

from __future__ import annotations

import csv
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .ea import RunRecord, default_budget, run_one_plus_one
from .generators import InstanceSpec
from .graph import Graph, InstanceError, UsageError
from .gsemo import run_gsemo
from .mutation import MutationStrategy
from .oracles import ENUMERATION_GUARD, exact_pareto_front, kruskal_mst, triangular_tailed_front, weighted_sum_front
from .ranking import rank_by_domination


def derive_seed(master: int, *index: int) -> int:
    """Independent per-run seed from (master seed, run coordinates)."""
    return int(np.random.SeedSequence([master, *index]).generate_state(1, dtype=np.uint64)[0])


# ---------------------------------------------------------------- shares


@dataclass
class ShareTable:
    shares: np.ndarray  # s(e) per edge id
    rank: tuple[int, ...]  # domination-number rank per edge id
    p_hat: np.ndarray  # p_hat[r-1] = share of the rank-r edge
    n_trees: int
    label: str = ""


def estimate_shares(graph: Graph, steps: int = 1000, seed: int = 0) -> ShareTable:
    """Share of each edge among the distinct non-dominated weighted-sum trees."""
    front = weighted_sum_front(graph, steps)
    counts = np.zeros(graph.m)
    for s in front.trees:
        counts[list(s)] += 1
    shares = counts / len(front.trees)
    ranking = rank_by_domination(graph, seed)
    p_hat = np.empty(graph.m)
    p_hat[np.array(ranking.rank) - 1] = shares
    return ShareTable(shares, ranking.rank, p_hat, len(front.trees), graph.label)


@dataclass
class PmCurve:
    n: int
    mean: np.ndarray  # mean p_hat per rank 1..len
    count: np.ndarray  # instances contributing to each rank

    @property
    def ranks(self) -> np.ndarray:
        return np.arange(1, len(self.mean) + 1)


def estimate_pm(template: InstanceSpec, instances: int, seed: int = 0, steps: int = 1000) -> PmCurve:
    """Average the per-rank share estimate over ``instances`` seeded graphs.

    Ranks beyond an instance's edge count (sparse DEG graphs vary in m) are
    averaged over the instances that have them.
    """
    if instances < 1:
        raise UsageError("need at least one instance")
    tables = []
    for i in range(instances):
        gseed = derive_seed(seed, i)
        graph = replace(template, seed=gseed).build()
        tables.append(estimate_shares(graph, steps, seed=gseed).p_hat)
    width = max(len(t) for t in tables)
    total = np.zeros(width)
    count = np.zeros(width, dtype=int)
    for t in tables:
        total[: len(t)] += t
        count[: len(t)] += 1
    return PmCurve(template.n, total / count, count)


@dataclass
class RegressionFit:
    beta: float
    r_squared: float
    rmse: float
    n: int
    model: str = "beta*((n-1)/n)**r"

    def predict(self, ranks) -> np.ndarray:
        return self.beta * ((self.n - 1) / self.n) ** np.asarray(ranks, dtype=float)


def fit_beta_model(curve, n: int, ranks=None) -> RegressionFit:
    """Least-squares beta for y = beta * ((n-1)/n)**r with the base held fixed."""
    y = np.asarray(curve.mean if isinstance(curve, PmCurve) else curve, dtype=float)
    if y.size == 0:
        raise UsageError("empty curve")
    r = np.arange(1, y.size + 1) if ranks is None else np.asarray(ranks, dtype=float)
    if not np.any(y):
        raise InstanceError("degenerate fit: curve is identically zero")
    x = ((n - 1) / n) ** r
    beta = float(x @ y / (x @ x))
    res = y - beta * x
    ss_res = float(res @ res)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return RegressionFit(beta, r2, math.sqrt(ss_res / y.size), n)


# ---------------------------------------------------------------- runs


def target_front(graph: Graph) -> list[tuple]:
    """Exact front: constructed for G1M/G2M, enumerated otherwise."""
    if graph.meta.get("family") in ("g1m", "g2m"):
        return list(triangular_tailed_front(graph))
    return list(exact_pareto_front(graph, ENUMERATION_GUARD))


def run_single(graph: Graph, algo: str, variant: str, budget: int, seed: int, target=None) -> RunRecord:
    """One seeded run; the run seed also fixes the rank tie-breaking."""
    strategy = MutationStrategy.for_graph(graph, variant, seed)
    rng = random.Random(seed)
    if algo == "ea":
        return run_one_plus_one(graph, strategy, budget, rng, target=target, seed=seed)
    if algo == "gsemo":
        return run_gsemo(graph, strategy, budget, target if target is not None else target_front(graph), rng, seed=seed)
    raise UsageError(f"unknown algorithm {algo!r}")


def _run_task(args):
    rec = run_single(*args)
    rec.extra = {}
    return rec


def run_replicates(graph: Graph, algo: str, variant: str, budget: int | None, reps: int,
                   master_seed: int, workers: int = 1, index_prefix=()) -> list[RunRecord]:
    """``reps`` runs with seeds derived from (master_seed, *index_prefix, rep)."""
    if budget is None:
        budget = default_budget(algo, graph.n, graph.m)
    if algo == "ea":
        target = kruskal_mst(graph)[1]
    elif algo == "gsemo":
        target = target_front(graph)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")
    tasks = [(graph, algo, variant, budget, derive_seed(master_seed, *index_prefix, i), target) for i in range(reps)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


@dataclass
class ScalingResult:
    sizes: list[int]
    stats: list[dict]
    alpha: float
    intercept: float
    excluded: list[int] = field(default_factory=list)
    records: list[RunRecord] = field(default_factory=list)


def fit_power_law(ns, values) -> tuple[float, float]:
    """Least squares of log(value) = alpha * log(n) + c."""
    alpha, c = np.polyfit(np.log(np.asarray(ns, dtype=float)), np.log(np.asarray(values, dtype=float)), 1)
    return float(alpha), float(c)


def summarize(n: int, recs: list[RunRecord]) -> dict:
    its = np.array([r.iterations for r in recs if r.success], dtype=float)
    out = {"n": n, "runs": len(recs), "successes": int(its.size), "success_rate": its.size / len(recs)}
    if its.size:
        q1, med, q3 = np.percentile(its, [25, 50, 75])
        out.update(median=float(med), q1=float(q1), q3=float(q3))
    else:
        out.update(median=math.nan, q1=math.nan, q3=math.nan)
    return out


def runtime_scaling(algo: str, variant: str, family: str, sizes, reps: int, seed: int = 0,
                    budget: int | None = None, workers: int = 1) -> ScalingResult:
    """Median iterations per n and the fitted exponent of log(median) vs log(n).

    Sizes where fewer than half the runs succeed are excluded from the fit.
    """
    sizes = list(sizes)
    if len(sizes) < 2:
        raise UsageError("need at least two sizes")
    if reps < 10:
        raise UsageError("need at least 10 repetitions per size")
    stats, records, excluded = [], [], []
    for n in sizes:
        graph = InstanceSpec(family, n).build()
        recs = run_replicates(graph, algo, variant, budget, reps, seed, workers, index_prefix=(n,))
        records += recs
        st = summarize(n, recs)
        st["included"] = st["success_rate"] >= 0.5
        if not st["included"]:
            excluded.append(n)
        stats.append(st)
    used = [s for s in stats if s["included"]]
    if len(used) >= 2:
        alpha, c = fit_power_law([s["n"] for s in used], [s["median"] for s in used])
    else:
        alpha = c = math.nan
    return ScalingResult(sizes, stats, alpha, c, excluded, records)


def write_records_csv(path, records, wall: bool = True) -> None:
    header = list(RunRecord.CSV_HEADER)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header if wall else header[:-1])
        for r in records:
            row = r.csv_row()
            w.writerow(row if wall else row[:-1])
