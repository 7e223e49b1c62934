"""Incremental Bowyer-Watson Delaunay triangulation of a planar point set."""

from __future__ import annotations

import numpy as np


def _circumcircle(p, a, b, c):
    ax, ay = p[a]
    bx, by = p[b]
    cx, cy = p[c]
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return ux, uy, (ax - ux) ** 2 + (ay - uy) ** 2


def delaunay_edges(points, jitter_seed: int | None = 0, jitter: float = 1e-9) -> list[tuple[int, int]]:
    """Sorted list of Delaunay edges (i, j), i < j, of ``points`` (shape (n, 2)).

    A tiny deterministic jitter breaks cocircular and collinear ties.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n < 3:
        return [(0, 1)] if n == 2 else []
    if jitter_seed is not None:
        pts = pts + np.random.default_rng(jitter_seed).uniform(-jitter, jitter, pts.shape)
    lo = pts.min(axis=0)
    span = float(max(np.ptp(pts, axis=0).max(), 1.0))
    cx, cy = lo + span / 2
    big = 1e3 * span
    p = [tuple(x) for x in pts.tolist()]
    p += [(cx - 2 * big, cy - big), (cx + 2 * big, cy - big), (cx, cy + 2 * big)]
    s0, s1, s2 = n, n + 1, n + 2

    tris = {(s0, s1, s2): _circumcircle(p, s0, s1, s2)}
    for i in range(n):
        px, py = p[i]
        bad = [t for t, (ux, uy, r2) in tris.items() if (px - ux) ** 2 + (py - uy) ** 2 < r2]
        edge_count: dict[tuple[int, int], int] = {}
        for t in bad:
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                key = (a, b) if a < b else (b, a)
                edge_count[key] = edge_count.get(key, 0) + 1
            del tris[t]
        for (a, b), cnt in edge_count.items():
            if cnt == 1:
                t = (a, b, i)
                tris[t] = _circumcircle(p, *t)

    edges = set()
    for t in tris:
        if max(t) >= n:
            continue
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            edges.add((min(a, b), max(a, b)))
    return sorted(edges)
