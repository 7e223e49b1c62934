import collections
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mstbias import Graph, MutationStrategy, SpanningTree, UsageError, Variant, choose_distribution, mutate, sample_k
from mstbias import mutation as mutation_mod
from mstbias import is_spanning_tree, random_spanning_tree
from mstbias.graph import insert_and_break_cycle

from helpers import brute_force_trees, random_connected_graph

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)), ((1,), (2,), (5,)))


def test_sample_k_distribution():
    rng = random.Random(0)
    N = 10**6
    draws = [sample_k(rng) for _ in range(N)]
    counts = collections.Counter(draws)
    assert min(draws) >= 1
    e1 = math.exp(-1)
    sigma = math.sqrt(e1 * (1 - e1) / N)
    assert abs(counts[1] / N - e1) < 4 * sigma
    assert abs(counts[2] / N - e1) < 4 * sigma
    assert abs(np.mean(draws) - 2.0) < 0.01


def test_choose_distribution():
    g = TRIANGLE
    rng = random.Random(1)
    um = MutationStrategy.for_graph(g, "um")
    bm = MutationStrategy.for_graph(g, "bm")
    mm = MutationStrategy.for_graph(g, "mm")
    assert all(choose_distribution(um, rng) is um.uniform for _ in range(100))
    assert all(choose_distribution(bm, rng) is bm.biased for _ in range(100))
    N = 10**6
    biased = sum(choose_distribution(mm, rng) is mm.biased for _ in range(N))
    assert abs(biased / N - 0.5) < 0.002


def test_strategy_validation():
    u = MutationStrategy.for_graph(TRIANGLE, "um").uniform
    with pytest.raises(UsageError):
        MutationStrategy(Variant.MM, uniform=u)
    with pytest.raises(UsageError):
        MutationStrategy(Variant.BM, uniform=u)


def test_fuzz_mutations_keep_spanning_trees():
    rng = random.Random(2)
    total = 0
    while total < 10**5:
        n = rng.randint(3, 12)
        g = random_connected_graph(n, rng.uniform(0.2, 0.9), rng, dim=rng.choice((1, 2)))
        strategy = MutationStrategy.for_graph(g, rng.choice(list(Variant)), rng.randrange(100))
        tree = random_spanning_tree(g, rng)
        for _ in range(1000):
            child = mutate(tree, strategy, rng)
            assert is_spanning_tree(g, child.edges)
            tree = child
        total += 1000


def test_mutation_on_tree_graph_is_identity():
    g = Graph(5, ((0, 1), (1, 2), (2, 3), (2, 4)), ((1,), (2,), (3,), (4,)))
    tree = random_spanning_tree(g, random.Random(0))
    rng = random.Random(3)
    for v in Variant:
        strategy = MutationStrategy.for_graph(g, v)
        for _ in range(200):
            assert mutate(tree, strategy, rng) == tree


def exact_transition_matrix(graph, trees):
    """One insert-and-drop step under uniform selection, by enumerating (edge, dropped edge)."""
    index = {t: i for i, t in enumerate(trees)}
    P = np.zeros((len(trees), len(trees)))
    for t in trees:
        tree = SpanningTree(graph, t)
        for e in range(graph.m):
            if e in t:
                P[index[t], index[t]] += 1 / graph.m
                continue
            u, v = graph.edges[e]
            cycle = [e, *tree.path(u, v)]
            for f in cycle:
                P[index[t], index[(t | {e}) - {f}]] += 1 / graph.m / len(cycle)
    return P


def test_triangle_transition_matrix(monkeypatch):
    monkeypatch.setattr(mutation_mod, "sample_k", lambda rng: 1)
    trees = brute_force_trees(TRIANGLE)
    P = exact_transition_matrix(TRIANGLE, trees)
    assert np.allclose(np.diag(P), 7 / 9) and np.allclose(P.sum(axis=1), 1)
    assert np.allclose(P[~np.eye(3, dtype=bool)], 1 / 9)

    strategy = MutationStrategy.for_graph(TRIANGLE, "um")
    rng = random.Random(4)
    N = 20000
    for i, t in enumerate(trees):
        tree = SpanningTree(TRIANGLE, t)
        counts = collections.Counter(mutate(tree, strategy, rng).edge_ids for _ in range(N))
        for j, t2 in enumerate(trees):
            p = P[i, j]
            assert abs(counts[t2] / N - p) < 4 * math.sqrt(p * (1 - p) / N)


@settings(max_examples=40)
@given(st.integers(3, 10), st.integers(0, 10**6), st.sampled_from(list(Variant)))
def test_mutation_changes_at_most_k_edges(n, seed, variant):
    rng = random.Random(seed)
    g = random_connected_graph(n, 0.7, rng)
    strategy = MutationStrategy.for_graph(g, variant, seed)
    tree = random_spanning_tree(g, rng)
    for _ in range(50):
        state = rng.getstate()
        k = sample_k(rng)  # mutate draws k first from the same stream
        rng.setstate(state)
        child = mutate(tree, strategy, rng)
        assert len(tree.edges ^ child.edges) // 2 <= k
        tree = child


@given(st.integers(0, 10**6))
def test_mutation_is_deterministic(seed):
    g = random_connected_graph(8, 0.6, random.Random(seed))
    strategy = MutationStrategy.for_graph(g, "mm", seed)
    tree = random_spanning_tree(g, random.Random(seed))
    a = [mutate(tree, strategy, random.Random(seed + i)).edge_ids for i in range(10)]
    b = [mutate(tree, strategy, random.Random(seed + i)).edge_ids for i in range(10)]
    assert a == b


def test_mutate_does_not_touch_input():
    g = random_connected_graph(9, 0.8, random.Random(5))
    tree = random_spanning_tree(g, random.Random(5))
    before = tree.edge_ids
    strategy = MutationStrategy.for_graph(g, "um")
    rng = random.Random(6)
    for _ in range(100):
        mutate(tree, strategy, rng)
    assert tree.edge_ids == before
    assert insert_and_break_cycle(tree, 0, rng) is not tree
