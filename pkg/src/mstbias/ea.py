"""(1+1) EA on spanning trees with UM, BM or MM edge selection."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, SpanningTree, UsageError, random_spanning_tree, tree_weight
from .mutation import MutationStrategy, mutate_inplace
from .oracles import kruskal_mst

HARD_CAP = 10**8


@dataclass
class RunRecord:
    seed: int
    graph: str
    algo: str
    n: int
    m: int
    iterations: int
    success: bool
    final_weight: tuple
    budget: int
    wall_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    CSV_HEADER = ("seed", "graph", "algo", "n", "m", "iterations", "success",
                  "final_w1", "final_w2", "budget", "wall_ms")

    def csv_row(self) -> list:
        w = list(self.final_weight) + [""] * (2 - len(self.final_weight))
        return [self.seed, self.graph, self.algo, self.n, self.m, self.iterations,
                int(self.success), w[0], w[1], self.budget, f"{self.wall_ms:.3f}"]


def default_budget(algo: str, n: int, m: int) -> int:
    """10 * ceil(n^2 ln n) * m/n for the (1+1) EA; GSEMO gets a further factor n."""
    base = 10 * math.ceil(n * n * math.log(n)) * m / n
    if algo == "gsemo":
        base *= n
    return int(min(math.ceil(base), HARD_CAP))


def bad_edge_count(tree: SpanningTree, graph: Graph | None = None) -> int:
    """Number of bottom (weight-3a) tail edges in ``tree``."""
    graph = graph or tree.graph
    bottom = graph.meta.get("bottom_edges")
    if bottom is None or graph.meta.get("family") not in ("g1", "g2", "g1m", "g2m"):
        raise UsageError("bad_edge_count needs a triangular-tailed instance")
    return sum(1 for e in bottom if e in tree.edges)


def run_one_plus_one(
    graph: Graph,
    strategy: MutationStrategy,
    budget: int,
    rng: random.Random,
    target=None,
    seed: int | None = None,
    stop_at_target: bool = True,
    on_accept: Callable[[int, SpanningTree, object], None] | None = None,
) -> RunRecord:
    """Run the (1+1) EA from a uniform random spanning tree.

    Accepts an offspring iff its weight is no larger. Stops at the first
    iteration whose tree weighs ``target`` (the Kruskal weight by default)
    or after ``budget`` iterations. With ``stop_at_target=False`` the run
    uses its whole budget and ``iterations`` still reports the first hit.
    ``on_accept(iteration, tree, weight)`` is called after each accepted step.
    """
    if graph.weight_dim != 1:
        raise UsageError("the (1+1) EA needs single-objective weights")
    if budget < 1:
        raise UsageError("budget must be >= 1")
    if target is None:
        target = kruskal_mst(graph)[1]
    t0 = time.perf_counter()
    w = graph.column(0)
    exact = graph.integral

    tree = random_spanning_tree(graph, rng)
    cur = tree_weight(tree)[0]
    hit = 0 if cur == target else None
    it = 0
    while it < budget and (hit is None or not stop_at_target):
        it += 1
        snap = tree.snapshot()
        swaps = mutate_inplace(tree, strategy, rng)
        if not swaps:
            if on_accept is not None:
                on_accept(it, tree, cur)
            continue
        terms = [w[e] for e, _ in swaps] + [-w[f] for _, f in swaps]
        delta = sum(terms) if exact else math.fsum(terms)
        if delta <= 0:
            if delta < 0:
                cur = cur + delta if exact else tree_weight(tree)[0]
                if hit is None and cur == target:
                    hit = it
            if on_accept is not None:
                on_accept(it, tree, cur)
        else:
            tree.restore(snap, swaps)

    elapsed = (time.perf_counter() - t0) * 1000.0
    return RunRecord(
        seed=seed if seed is not None else -1,
        graph=graph.label,
        algo=f"ea-{strategy.variant.value}",
        n=graph.n,
        m=graph.m,
        iterations=hit if hit is not None else it,
        success=hit is not None,
        final_weight=(cur,),
        budget=budget,
        wall_ms=elapsed,
        extra={"tree": tree, "target": target},
    )
