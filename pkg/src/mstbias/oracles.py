"""Exact ground truth: Kruskal MST, exhaustive spanning-tree enumeration,
exact Pareto fronts and the weighted-sum front approximation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, InstanceError, SpanningTree, UsageError, edge_set_weight

ENUMERATION_GUARD = 10**6


class _DSU:
    __slots__ = ("p",)

    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[ra] = rb
        return True


def _kruskal_order(graph: Graph, order) -> list[int]:
    dsu = _DSU(graph.n)
    chosen = []
    need = graph.n - 1
    edges = graph.edges
    for e in order:
        u, v = edges[e]
        if dsu.union(u, v):
            chosen.append(e)
            if len(chosen) == need:
                break
    return chosen


def kruskal_mst(graph: Graph) -> tuple[SpanningTree, object]:
    """MST by sort + union-find; ties broken by edge id. Returns (tree, weight)."""
    if graph.weight_dim != 1:
        raise UsageError("kruskal_mst needs single-objective weights")
    w = graph.column(0)
    chosen = _kruskal_order(graph, sorted(range(graph.m), key=lambda e: (w[e], e)))
    return SpanningTree(graph, chosen), edge_set_weight(graph, chosen)[0]


def kirchhoff_count(graph: Graph) -> int:
    """Number of spanning trees (matrix-tree theorem)."""
    n = graph.n
    if n == 1:
        return 1
    lap = np.zeros((n, n))
    for u, v in graph.edges:
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    sign, logdet = np.linalg.slogdet(lap[1:, 1:])
    return int(round(sign * math.exp(logdet)))


_PRODUCT_LIMIT = 5 * 10**7  # parent-choice combinations scanned by the vectorised path
_CHUNK = 1 << 18


def _check_guard(graph: Graph, guard: int) -> None:
    count = kirchhoff_count(graph)
    if count > guard:
        raise InstanceError(f"graph has {count} spanning trees, above the enumeration guard {guard}")


def _parent_choice_trees(graph: Graph) -> np.ndarray | None:
    """All spanning trees as rows of edge ids, or None if the scan would be too large.

    Rooted at a maximum-degree vertex, a spanning tree is exactly one choice
    of parent edge per other vertex whose parent pointers all lead to the
    root. Every combination is scanned in chunks and acyclicity is tested by
    pointer doubling.
    """
    n = graph.n
    adj = graph.adjacency
    root = max(range(n), key=lambda v: (len(adj[v]), -v))
    others = [v for v in range(n) if v != root]
    radix = [len(adj[v]) for v in others]
    total = math.prod(radix)
    if total > _PRODUCT_LIMIT:
        return None
    nbr = [np.array([w for w, _ in adj[v]], dtype=np.int32) for v in others]
    eid = [np.array([e for _, e in adj[v]], dtype=np.int32) for v in others]
    rounds = max(1, math.ceil(math.log2(n - 1))) if n > 2 else 1
    out = []
    for start in range(0, total, _CHUNK):
        code = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        par = np.empty((code.size, n), dtype=np.int32)
        par[:, root] = root
        ids = np.empty((code.size, n - 1), dtype=np.int32)
        for j, v in enumerate(others):
            code, digit = np.divmod(code, radix[j])
            par[:, v] = nbr[j][digit]
            ids[:, j] = eid[j][digit]
        reach = par
        for _ in range(rounds):
            reach = np.take_along_axis(reach, reach, axis=1)
        ok = (reach == root).all(axis=1)
        out.append(np.sort(ids[ok], axis=1))
    return np.concatenate(out) if out else np.empty((0, n - 1), dtype=np.int32)


def _include_delete_trees(graph: Graph) -> list[tuple[int, ...]]:
    """Include/delete recursion over edge ids: an edge closing a cycle is forced
    out, and deleting an edge is only explored while the remaining edges
    still connect the graph, so every branch ends in a tree."""
    n, m, edges = graph.n, graph.m, graph.edges
    need = n - 1
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def find(comp, x):
        while comp[x] != x:
            x = comp[x]
        return x

    def still_connected(comp, i):
        # components of the chosen forest, merged further by edges i..m-1
        c = comp[:]
        k = len(chosen)
        for e in range(i, m):
            u, v = edges[e]
            ru, rv = find(c, u), find(c, v)
            if ru != rv:
                c[ru] = rv
                k += 1
                if k == need:
                    return True
        return k == need

    def rec(i, comp):
        if len(chosen) == need:
            out.append(tuple(chosen))
            return
        u, v = edges[i]
        ru, rv = find(comp, u), find(comp, v)
        if ru != rv:
            comp2 = comp[:]
            comp2[ru] = rv
            chosen.append(i)
            rec(i + 1, comp2)
            chosen.pop()
        if still_connected(comp, i + 1):
            rec(i + 1, comp)

    rec(0, list(range(n)))
    return out


def spanning_edge_array(graph: Graph, guard: int = ENUMERATION_GUARD) -> np.ndarray:
    """Every spanning tree once, as a (trees, n-1) array of sorted edge ids."""
    _check_guard(graph, guard)
    if graph.n == 1:
        return np.empty((1, 0), dtype=np.int32)
    arr = _parent_choice_trees(graph)
    if arr is None:
        arr = np.array(_include_delete_trees(graph), dtype=np.int32)
    # canonical order so results do not depend on which path produced them
    return arr[np.lexsort(arr.T[::-1])]


def spanning_edge_tuples(graph: Graph, guard: int = ENUMERATION_GUARD) -> list[tuple[int, ...]]:
    """Every spanning tree as a sorted tuple of edge ids, each exactly once."""
    return list(map(tuple, spanning_edge_array(graph, guard).tolist()))


def iter_spanning_edge_sets(graph: Graph, guard: int = ENUMERATION_GUARD):
    for t in spanning_edge_tuples(graph, guard):
        yield frozenset(t)


def enumerate_spanning_trees(graph: Graph, guard: int = ENUMERATION_GUARD) -> list[SpanningTree]:
    return [SpanningTree(graph, t) for t in spanning_edge_tuples(graph, guard)]


def nondominated(points):
    """Distinct points not strictly dominated by any other point, sorted."""
    pts = sorted(set(points))
    out = []
    best2 = math.inf
    # sorted by (w1, w2): a point survives iff its w2 beats every earlier w2
    for p in pts:
        if p[1] < best2:
            out.append(p)
            best2 = p[1]
    return out


def exact_pareto_front(graph: Graph, guard: int = ENUMERATION_GUARD) -> dict[tuple, SpanningTree]:
    """Non-dominated weight vectors over all spanning trees, with one witness each."""
    if graph.weight_dim != 2:
        raise UsageError("exact_pareto_front needs bi-objective weights")
    trees = spanning_edge_array(graph, guard)
    if graph.integral:
        sums = np.array(graph.weights, dtype=np.int64)[trees].sum(axis=1)
        pts, first = np.unique(sums, axis=0, return_index=True)
        witness = {tuple(int(x) for x in p): tuple(trees[i].tolist()) for p, i in zip(pts, first)}
    else:
        # float sums only pre-filter: drop trees beaten by a margin well above
        # rounding error, then decide dominance on exact (fsum) weights
        sums = np.array(graph.weights, dtype=float)[trees].sum(axis=1)
        order = np.lexsort((sums[:, 1], sums[:, 0]))
        srt = sums[order]
        prev_min = np.concatenate(([np.inf], np.minimum.accumulate(srt[:, 1])[:-1]))
        approx = srt[srt[:, 1] < prev_min]
        tol = 1e-9 * float(np.abs(sums).max())
        j = np.searchsorted(approx[:, 0], sums[:, 0] - tol, side="left")
        best2 = np.where(j > 0, approx[np.maximum(j - 1, 0), 1], np.inf)
        keep = np.nonzero(~(best2 < sums[:, 1] - tol))[0]
        witness = {}
        for i in keep.tolist():
            t = tuple(trees[i].tolist())
            witness.setdefault(edge_set_weight(graph, t), t)
    front = nondominated(witness)
    return {w: SpanningTree(graph, witness[w]) for w in front}


@dataclass
class SupportedFront:
    points: list[tuple]  # non-dominated weight vectors, sorted by w1
    trees: list[frozenset]  # distinct edge sets whose weight is in ``points``


def weighted_sum_front(graph: Graph, steps: int = 1000) -> SupportedFront:
    """Kruskal on lambda*w1 + (1-lambda)*w2 for lambda = k/steps, k = 0..steps."""
    if graph.weight_dim != 2:
        raise UsageError("weighted_sum_front needs bi-objective weights")
    if steps < 1:
        raise UsageError("steps must be >= 1")
    w1 = np.array(graph.column(0), dtype=float)
    w2 = np.array(graph.column(1), dtype=float)
    found: dict[frozenset, tuple] = {}
    for k in range(steps + 1):
        lam = k / steps
        order = np.argsort(lam * w1 + (1.0 - lam) * w2, kind="stable")
        s = frozenset(_kruskal_order(graph, order.tolist()))
        if s not in found:
            found[s] = edge_set_weight(graph, s)
    points = nondominated(found.values())
    keep = set(points)
    trees = sorted((s for s, w in found.items() if w in keep), key=lambda s: (found[s], sorted(s)))
    return SupportedFront(points, trees)


def triangular_tailed_front(graph: Graph) -> dict[tuple, SpanningTree]:
    """Pareto front of a G1M/G2M instance with a constructed witness per point.

    Tail part: r triangles take both upper edges, the rest one upper plus the
    bottom edge, giving (3*eta - r, 3*eta + r). Clique part: G^S plus clique
    edges completing a path; identical for every Pareto tree.
    """
    meta = graph.meta
    if meta.get("family") not in ("g1m", "g2m"):
        raise UsageError("graph is not a G1M/G2M instance")
    n, eta = meta["n"], meta["eta"]
    index = {graph.edges[e]: e for e in meta["clique_edges"]}
    c0 = n // 2
    clique_path = [index[(c0 + i, c0 + i + 1)] for i in range(n // 2 - 1)]
    assert set(meta.get("gs_edges", [])) <= set(clique_path)
    upper, bottom = meta["upper_edges"], meta["bottom_edges"]
    out = {}
    for r in range(eta + 1):
        tail = []
        for t in range(eta):
            if t < r:
                tail += [upper[2 * t], upper[2 * t + 1]]
            else:
                tail += [upper[2 * t], bottom[t]]
        ids = tail + clique_path
        out[edge_set_weight(graph, ids)] = SpanningTree(graph, ids)
    return dict(sorted(out.items()))

