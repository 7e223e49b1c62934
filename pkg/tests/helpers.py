"""Independent oracles and instance builders used only by the tests."""

import functools
import heapq
import itertools
import random

from mstbias.generators import InstanceSpec
from mstbias.experiments import estimate_pm
from mstbias.graph import Graph, _connected

# one "C<k> PASS|FAIL ..." line per acceptance criterion, printed at session end
ACCEPTANCE_LINES = []


def random_connected_graph(n, p, rng, dim=1, wmax=20, integral=True):
    """Random spanning tree plus each other pair with probability p."""
    verts = list(range(n))
    rng.shuffle(verts)
    pairs = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in pairs and rng.random() < p:
            pairs.add((u, v))
    edges = sorted(pairs)

    def w():
        return rng.randint(1, wmax) if integral else rng.uniform(1.0, wmax)

    weights = [tuple(w() for _ in range(dim)) for _ in edges]
    return Graph(n, tuple(edges), tuple(weights))


def brute_force_trees(graph):
    """All spanning trees via (n-1)-subsets; only for tiny graphs."""
    return [
        frozenset(c)
        for c in itertools.combinations(range(graph.m), graph.n - 1)
        if _connected(graph.n, [graph.edges[e] for e in c])
    ]


def prim_weight(graph):
    """Prim's algorithm with a heap, objective 0."""
    seen = {0}
    heap = [(graph.weights[e][0], e, v) for v, e in graph.adjacency[0]]
    heapq.heapify(heap)
    total = 0
    while len(seen) < graph.n:
        w, e, v = heapq.heappop(heap)
        if v in seen:
            continue
        seen.add(v)
        total += w
        for x, f in graph.adjacency[v]:
            if x not in seen:
                heapq.heappush(heap, (graph.weights[f][0], f, x))
    return total


def cycle_brute_force(graph, tree_edges, e):
    """Edges of T + e whose removal leaves a spanning tree (= the cycle through e)."""
    cand = set(tree_edges) | {e}
    return {f for f in cand if _connected(graph.n, [graph.edges[g] for g in cand - {f}])}


@functools.lru_cache(maxsize=None)
def pm_curve_ceg_rndrnd_25(instances=100, seed=0):
    return estimate_pm(InstanceSpec("ceg", 25, weights="rndrnd"), instances, seed=seed)


def rng(seed=0):
    return random.Random(seed)
