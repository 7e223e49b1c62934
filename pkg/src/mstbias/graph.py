"""Graphs, spanning trees and Pareto dominance.

A :class:`SpanningTree` is stored as a rooted tree (parent pointer plus the
id of the edge to the parent) so that the tree path between two vertices
can be found by climbing from both ends. Random spanning trees have short
paths, so an edge exchange usually costs far less than a full traversal.
"""

from __future__ import annotations

import enum
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

WeightVec = tuple  # 1 or 2 positive numbers


class UsageError(ValueError):
    """Bad arguments or preconditions (CLI exit code 1)."""


class InstanceError(ValueError):
    """Invalid instance, or a guard refusing an infeasible computation (CLI exit code 2)."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected graph with 1- or 2-dimensional positive edge weights.

    Edge ids are positions in ``edges``. ``meta`` carries instance metadata
    written by the generators (tail edges, G^S edges, ...).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[WeightVec, ...]
    label: str = ""
    meta: Mapping = field(default_factory=dict)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        weights = tuple(tuple(w) for w in self.weights)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", weights)
        if self.n < 1:
            raise InstanceError("graph needs at least one vertex")
        if len(edges) != len(weights):
            raise InstanceError("edges and weights differ in length")
        dims = {len(w) for w in weights}
        if len(dims) > 1:
            raise InstanceError(f"mixed weight dimensions {sorted(dims)}")
        dim = dims.pop() if dims else 1
        if dim not in (1, 2):
            raise InstanceError(f"weight dimension must be 1 or 2, got {dim}")
        seen = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"edge {eid} ({u},{v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise InstanceError(f"edge {eid} is a self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceError(f"duplicate edge {key}")
            seen.add(key)
            if any(not (c > 0) for c in weights[eid]):
                raise InstanceError(f"edge {eid} has a non-positive weight {weights[eid]}")
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        object.__setattr__(self, "weight_dim", dim)
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(
            self, "integral", all(isinstance(c, int) for w in weights for c in w)
        )
        if not _connected(self.n, edges):
            raise InstanceError("graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def w_max(self):
        return max(c for w in self.weights for c in w)

    def column(self, i: int) -> list:
        """Objective ``i`` of every edge, indexed by edge id."""
        return [w[i] for w in self.weights]

    def __repr__(self):
        return f"Graph(label={self.label!r}, n={self.n}, m={self.m}, d={self.weight_dim})"


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def is_spanning_tree(graph: Graph, edge_ids: Iterable[int]) -> bool:
    """Validator independent of :class:`SpanningTree` internals."""
    ids = list(edge_ids)
    if len(ids) != graph.n - 1 or len(set(ids)) != len(ids):
        return False
    if any(not (0 <= e < graph.m) for e in ids):
        return False
    return _connected(graph.n, [graph.edges[e] for e in ids])


class SpanningTree:
    """A spanning tree of ``graph`` kept as parent pointers rooted at ``root``."""

    __slots__ = ("graph", "parent", "pedge", "edges")

    def __init__(self, graph: Graph, edge_ids: Iterable[int], root: int = 0):
        ids = set(edge_ids)
        if not is_spanning_tree(graph, ids):
            raise UsageError("edge set is not a spanning tree of the graph")
        self.graph = graph
        self.edges = ids
        parent = [-1] * graph.n
        pedge = [-1] * graph.n
        seen = [False] * graph.n
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in graph.adjacency[x]:
                if e in ids and not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    pedge[y] = e
                    queue.append(y)
        self.parent = parent
        self.pedge = pedge

    @property
    def edge_ids(self) -> frozenset:
        return frozenset(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        return e in self.edges

    def __eq__(self, other):
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.graph is other.graph and self.edges == other.edges

    def __hash__(self):
        return hash(frozenset(self.edges))

    def __repr__(self):
        return f"SpanningTree({sorted(self.edges)})"

    def copy(self) -> "SpanningTree":
        t = object.__new__(SpanningTree)
        t.graph = self.graph
        t.edges = set(self.edges)
        t.parent = self.parent[:]
        t.pedge = self.pedge[:]
        return t

    def snapshot(self):
        return self.parent[:], self.pedge[:]

    def restore(self, snap, swaps) -> None:
        """Undo ``swaps`` (as returned by an in-place mutation) made since ``snap``."""
        self.parent, self.pedge = snap[0], snap[1]
        for e, f in reversed(swaps):
            self.edges.discard(e)
            self.edges.add(f)

    def path(self, u: int, v: int) -> list[int]:
        """Edge ids on the tree path from ``u`` to ``v``."""
        return self._path(u, v)[0]

    def _path(self, u, v):
        # Climb alternately from both ends until one side reaches a vertex the
        # other side has already visited; that vertex is the meeting point.
        parent, pedge = self.parent, self.pedge
        a, b = u, v
        da = {u: 0}
        db = {v: 0}
        ea: list[int] = []
        eb: list[int] = []
        if u == v:
            return [], 0, 0
        while True:
            pa = parent[a]
            if pa >= 0:
                ea.append(pedge[a])
                a = pa
                da[a] = len(ea)
                if a in db:
                    meet = a
                    break
            pb = parent[b]
            if pb >= 0:
                eb.append(pedge[b])
                b = pb
                db[b] = len(eb)
                if b in da:
                    meet = b
                    break
        na, nb = da[meet], db[meet]
        return ea[:na] + eb[:nb], na, nb

    def _exchange(self, e: int, u: int, v: int, path: list[int], na: int, j: int) -> None:
        """Insert edge ``e`` = (u, v) and drop ``path[j]`` (in place)."""
        f = path[j]
        if j >= na:
            u, v = v, u  # f lies on v's side of the cycle
        # x is the endpoint of f below the cut; re-root x's subtree at u.
        x = self._lower_endpoint(f)
        parent, pedge = self.parent, self.pedge
        cur, prev, prev_e = u, v, e
        while True:
            nxt, nxt_e = parent[cur], pedge[cur]
            parent[cur] = prev
            pedge[cur] = prev_e
            if cur == x:
                break
            prev, prev_e, cur = cur, nxt_e, nxt
        self.edges.discard(f)
        self.edges.add(e)

    def _lower_endpoint(self, f: int) -> int:
        a, b = self.graph.edges[f]
        return a if self.pedge[a] == f else b

    def insert_inplace(self, e: int, rng: random.Random) -> int | None:
        """Add ``e`` and drop a uniform edge of the created cycle.

        Returns the dropped edge, or ``None`` if the tree is unchanged
        (``e`` already present, or ``e`` itself was dropped).
        """
        if e in self.edges:
            return None
        u, v = self.graph.edges[e]
        path, na, _ = self._path(u, v)
        j = int(rng.random() * (len(path) + 1))
        if j == len(path):
            return None
        f = path[j]
        self._exchange(e, u, v, path, na, j)
        return f


def tree_weight(tree: SpanningTree, graph: Graph | None = None) -> WeightVec:
    """Componentwise sum of the weights of the tree's edges."""
    if graph is not None and tree.graph is not graph:
        raise UsageError("tree does not belong to this graph")
    g = tree.graph
    return edge_set_weight(g, tree.edges)


def edge_set_weight(graph: Graph, edge_ids: Iterable[int]) -> WeightVec:
    ws = [graph.weights[e] for e in edge_ids]
    total = sum if graph.integral else math.fsum
    return tuple(total(w[i] for w in ws) for i in range(graph.weight_dim))


class Dominance(enum.Enum):
    FIRST = "first_strictly_dominates"
    SECOND = "second_strictly_dominates"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominance(a: WeightVec, b: WeightVec) -> Dominance:
    if len(a) != len(b):
        raise UsageError(f"dimension mismatch: {len(a)} vs {len(b)}")
    a_le = all(x <= y for x, y in zip(a, b))
    b_le = all(y <= x for x, y in zip(a, b))
    if a_le and b_le:
        return Dominance.EQUAL
    if a_le:
        return Dominance.FIRST
    if b_le:
        return Dominance.SECOND
    return Dominance.INCOMPARABLE


def weakly_dominates(a: WeightVec, b: WeightVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def strictly_dominates(a: WeightVec, b: WeightVec) -> bool:
    return weakly_dominates(a, b) and any(x < y for x, y in zip(a, b))


def insert_and_break_cycle(tree: SpanningTree, e: int, rng: random.Random) -> SpanningTree:
    """Return a copy of ``tree`` with ``e`` inserted and one cycle edge dropped.

    The dropped edge is uniform over the whole cycle, including ``e`` itself.
    """
    if not (0 <= e < tree.graph.m):
        raise UsageError(f"edge id {e} out of range 0..{tree.graph.m - 1}")
    out = tree.copy()
    out.insert_inplace(e, rng)
    return out


def random_spanning_tree(graph: Graph, rng: random.Random) -> SpanningTree:
    """Uniform spanning tree by the Aldous-Broder random walk.

    The edge through which each vertex is first entered belongs to the tree.
    """
    adj = graph.adjacency
    n = graph.n
    v = rng.randrange(n)
    visited = [False] * n
    visited[v] = True
    left = n - 1
    chosen = []
    rand = rng.random
    while left:
        nbrs = adj[v]
        w, e = nbrs[int(rand() * len(nbrs))]
        if not visited[w]:
            visited[w] = True
            chosen.append(e)
            left -= 1
        v = w
    return SpanningTree(graph, chosen)
