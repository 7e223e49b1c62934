"""Instance families: triangular-tailed graphs (single and bi-objective),
the lollipop graph, and random complete / Delaunay graphs.

Triangular-tailed layout for ``n`` vertices: tail vertices ``0..n/2`` form
``n/4`` triangles ``{2i, 2i+1, 2i+2}``; vertex ``n/2`` is also the first
clique vertex, and the clique spans ``n/2..n-1``. Edge ids are assigned
triangle by triangle (upper, upper, bottom), then clique edges in
lexicographic order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .delaunay import delaunay_edges
from .graph import Graph, UsageError

FAMILIES = ("g1", "g2", "lollipop", "g1m", "g2m", "ceg", "deg")


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    n: int
    weights: str = "rndrnd"  # ceg/deg only
    l: int | None = None
    u: int | None = None
    k: int | None = None
    seed: int = 0

    def build(self) -> Graph:
        f = self.family.lower()
        if f in ("g1", "g2"):
            return gen_triangular_tailed(self.n, f)
        if f in ("g1m", "g2m"):
            return gen_triangular_tailed_mo(self.n, f, l=self.l, u=self.u, k=self.k)
        if f == "lollipop":
            return gen_lollipop(self.n)
        if f in ("ceg", "deg"):
            return gen_random(f, self.weights, self.n, self.seed)
        raise UsageError(f"unknown family {self.family!r}; expected one of {FAMILIES}")


def _tail(n: int):
    if n % 4 or n < 8:
        raise UsageError(f"triangular-tailed graphs need n divisible by 4 and n >= 8, got {n}")
    eta = n // 4
    edges, upper, bottom = [], [], []
    for i in range(eta):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        upper += [len(edges), len(edges) + 1]
        bottom.append(len(edges) + 2)
        edges += [(a, b), (b, c), (a, c)]
    clique = list(itertools.combinations(range(n // 2, n), 2))
    clique_ids = list(range(len(edges), len(edges) + len(clique)))
    edges += clique
    meta = {
        "n": n,
        "eta": eta,
        "nu": n // 2,
        "upper_edges": upper,
        "bottom_edges": bottom,
        "tail_edges": sorted(upper + bottom),
        "clique_edges": clique_ids,
    }
    return edges, meta


def gen_triangular_tailed(n: int, variant: str = "g1") -> Graph:
    variant = variant.lower()
    if variant not in ("g1", "g2"):
        raise UsageError(f"variant must be g1 or g2, got {variant!r}")
    edges, meta = _tail(n)
    a = n * n
    clique_w = 4 * a if variant == "g1" else a
    weights = [None] * len(edges)
    for e in meta["upper_edges"]:
        weights[e] = (2 * a,)
    for e in meta["bottom_edges"]:
        weights[e] = (3 * a,)
    for e in meta["clique_edges"]:
        weights[e] = (clique_w,)
    meta.update(family=variant, a=a)
    return Graph(n, tuple(edges), tuple(weights), label=f"{variant}-n{n}", meta=meta)


def gen_triangular_tailed_mo(n: int, variant: str = "g1m", l: int | None = None,
                             u: int | None = None, k: int | None = None) -> Graph:
    variant = variant.lower()
    if variant not in ("g1m", "g2m"):
        raise UsageError(f"variant must be g1m or g2m, got {variant!r}")
    edges, meta = _tail(n)
    weights = [None] * len(edges)
    for e in meta["upper_edges"]:
        weights[e] = (1, 2)
    for e in meta["bottom_edges"]:
        weights[e] = (2, 1)
    gs: list[int] = []
    if variant == "g1m":
        k = 3 if k is None else k
        if not k > 2:
            raise UsageError(f"G1M needs k > 2, got k={k}")
        u = l = None
    else:
        u = 3 if u is None else u
        k = u + n + 2 if k is None else k
        l = n // 2 - 1 if l is None else l
        if not 0 <= l <= n // 2 - 1:
            raise UsageError(f"G2M needs l <= n/2 - 1 = {n // 2 - 1}, got l={l}")
        if not u > 2:
            raise UsageError(f"G2M needs u > 2, got u={u}")
        if not k > u + n + 1:
            raise UsageError(f"G2M needs k > u + n + 1 = {u + n + 1}, got k={k}")
        # G^S: path over the first l+1 clique vertices
        index = {edges[e]: e for e in meta["clique_edges"]}
        c0 = n // 2
        gs = [index[(c0 + i, c0 + i + 1)] for i in range(l)]
    gs_set = set(gs)
    for e in meta["clique_edges"]:
        weights[e] = (u, u) if e in gs_set else (k, k)
    meta.update(family=variant, k=k, u=u, l=l, gs_edges=gs)
    return Graph(n, tuple(edges), tuple(weights), label=f"{variant}-n{n}", meta=meta)


def gen_lollipop(n: int) -> Graph:
    """Clique K_{n/2} (weight 1) with a path of n/2 edges (weight 2) hanging off vertex n/2-1."""
    if n % 2 or n < 6:
        raise UsageError(f"lollipop needs even n >= 6, got {n}")
    h = n // 2
    edges = list(itertools.combinations(range(h), 2))
    weights = [(1,)] * len(edges)
    path_ids = list(range(len(edges), len(edges) + h))
    edges += [(v, v + 1) for v in range(h - 1, n - 1)]
    weights += [(2,)] * h
    meta = {"family": "lollipop", "n": n, "path_edges": path_ids}
    return Graph(n, tuple(edges), tuple(weights), label=f"lollipop-n{n}", meta=meta)


def gen_random(cls: str, weight_model: str, n: int, seed: int) -> Graph:
    """Points uniform in [0,100]^2; complete (CEG) or Delaunay (DEG) edges.

    RNDRND: both weights U[5,200]. EUCRND: Euclidean length and U[5,200].
    """
    cls, weight_model = cls.lower(), weight_model.lower()
    if n < 3:
        raise UsageError(f"random graphs need n >= 3, got {n}")
    if weight_model not in ("rndrnd", "eucrnd"):
        raise UsageError(f"weight model must be rndrnd or eucrnd, got {weight_model!r}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, 100.0, size=(n, 2))
    if cls == "ceg":
        edges = list(itertools.combinations(range(n), 2))
    elif cls == "deg":
        edges = delaunay_edges(pts, jitter_seed=seed)
    else:
        raise UsageError(f"class must be ceg or deg, got {cls!r}")
    m = len(edges)
    second = rng.uniform(5.0, 200.0, size=m)
    if weight_model == "rndrnd":
        first = rng.uniform(5.0, 200.0, size=m)
    else:
        first = np.array([math.dist(pts[i], pts[j]) for i, j in edges])
    weights = tuple((float(a), float(b)) for a, b in zip(first, second))
    meta = {"family": cls, "weights": weight_model, "n": n, "seed": seed}
    return Graph(n, tuple(edges), weights, label=f"{cls}-{weight_model}-n{n}-s{seed}", meta=meta)
