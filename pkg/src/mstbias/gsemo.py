"""GSEMO for the bi-objective MST with uniform or domination-biased mutation."""

from __future__ import annotations

import csv
import random
import time
from typing import Callable, Iterable

from .ea import RunRecord
from .graph import Graph, SpanningTree, UsageError, random_spanning_tree, strictly_dominates, tree_weight, weakly_dominates
from .mutation import MutationStrategy, mutate_inplace


class ParetoArchive:
    """Mutually non-dominated (tree, weight) pairs, one tree per weight vector."""

    def __init__(self):
        self.members: list[tuple[SpanningTree, tuple]] = []

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def weights(self) -> set:
        return {w for _, w in self.members}

    def insert(self, tree: SpanningTree, weight: tuple) -> bool:
        """Add the candidate unless a member strictly dominates it.

        On acceptance every member the candidate weakly dominates (equal
        weights included) is removed.
        """
        for _, w in self.members:
            if strictly_dominates(w, weight):
                return False
        self.members = [(t, w) for t, w in self.members if not weakly_dominates(weight, w)]
        self.members.append((tree, weight))
        return True


def archive_insert(archive: ParetoArchive, candidate: tuple[SpanningTree, tuple]) -> bool:
    return archive.insert(*candidate)


def s_count(tree: SpanningTree, graph: Graph | None = None) -> int:
    """Number of G^S edges in ``tree`` (G2M instances only)."""
    graph = graph or tree.graph
    if graph.meta.get("family") != "g2m":
        raise UsageError("s_count needs a G2M instance")
    return sum(1 for e in graph.meta["gs_edges"] if e in tree.edges)


def run_gsemo(
    graph: Graph,
    strategy: MutationStrategy,
    budget: int,
    target_front: Iterable[tuple],
    rng: random.Random,
    seed: int | None = None,
    on_iteration: Callable[[int, ParetoArchive], None] | None = None,
    trace: list | None = None,
) -> RunRecord:
    """Run GSEMO until the archive covers ``target_front`` or the budget runs out.

    ``trace`` (if given) collects (iteration, covered_count) whenever coverage changes.
    """
    if graph.weight_dim != 2:
        raise UsageError("GSEMO needs bi-objective weights")
    if budget < 1:
        raise UsageError("budget must be >= 1")
    target = set(target_front)
    t0 = time.perf_counter()

    archive = ParetoArchive()
    first = random_spanning_tree(graph, rng)
    archive.insert(first, tree_weight(first))
    covered = len(target & archive.weights)
    if trace is not None:
        trace.append((0, covered))
    it = 0
    while covered < len(target) and it < budget:
        it += 1
        parent = archive.members[int(rng.random() * len(archive.members))][0]
        child = parent.copy()
        mutate_inplace(child, strategy, rng)
        if archive.insert(child, tree_weight(child)):
            now = len(target & archive.weights)
            if now != covered and trace is not None:
                trace.append((it, now))
            covered = now
        if on_iteration is not None:
            on_iteration(it, archive)

    ws = [w for _, w in archive.members]
    ideal = (min(w[0] for w in ws), min(w[1] for w in ws))
    return RunRecord(
        seed=seed if seed is not None else -1,
        graph=graph.label,
        algo=f"gsemo-{strategy.variant.value}",
        n=graph.n,
        m=graph.m,
        iterations=it,
        success=covered == len(target),
        final_weight=ideal,
        budget=budget,
        wall_ms=(time.perf_counter() - t0) * 1000.0,
        extra={"archive": archive},
    )


def write_archive_csv(path, archive: ParetoArchive) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["w1", "w2", "edge_ids"])
        for tree, wt in sorted(archive.members, key=lambda m: m[1]):
            w.writerow([wt[0], wt[1], " ".join(map(str, sorted(tree.edges)))])
