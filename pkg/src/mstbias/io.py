"""The ``momst 1`` graph text format.

    momst 1
    n m d
    u v w1 [w2]        (m lines, edge id = line order)
    # meta {...}       (optional trailing JSON metadata)

Lines starting with ``#`` are comments; the ``# meta`` line restores the
generator metadata (tail / G^S edge ids) needed by instrumented runs.
"""

from __future__ import annotations

import json

from .graph import Graph, InstanceError

HEADER = "momst 1"


def _fmt(x) -> str:
    return str(x) if isinstance(x, int) else repr(float(x))


def _num(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


def dumps(graph: Graph) -> str:
    lines = [HEADER, f"{graph.n} {graph.m} {graph.weight_dim}"]
    for (u, v), w in zip(graph.edges, graph.weights):
        lines.append(" ".join([str(u), str(v), *map(_fmt, w)]))
    if graph.meta or graph.label:
        lines.append("# meta " + json.dumps({"label": graph.label, **graph.meta}, sort_keys=True))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    meta = {}
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("# meta "):
            meta = json.loads(line[len("# meta "):])
            continue
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows or " ".join(rows[0]) != HEADER:
        raise InstanceError(f"missing '{HEADER}' header")
    try:
        n, m, d = map(int, rows[1])
    except (IndexError, ValueError) as exc:
        raise InstanceError("second line must be 'n m d'") from exc
    body = rows[2:]
    if len(body) != m:
        raise InstanceError(f"header announces {m} edges, found {len(body)}")
    edges, weights = [], []
    for i, toks in enumerate(body):
        if len(toks) != 2 + d:
            raise InstanceError(f"edge line {i} needs {2 + d} fields")
        edges.append((int(toks[0]), int(toks[1])))
        weights.append(tuple(_num(t) for t in toks[2:]))
    label = meta.pop("label", "")
    return Graph(n, tuple(edges), tuple(weights), label=label, meta=meta)


def write_graph(path, graph: Graph) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(graph))


def read_graph(path) -> Graph:
    with open(path) as fh:
        return loads(fh.read())
