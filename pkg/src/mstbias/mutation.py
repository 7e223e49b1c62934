"""k-fold edge-exchange mutation with uniform, biased or mixed edge selection."""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from .graph import Graph, SpanningTree, UsageError
from .ranking import (
    SelectionDistribution,
    biased_distribution,
    rank_by_domination,
    rank_by_weight,
    uniform_distribution,
)

_EXP_M1 = math.exp(-1.0)


class Variant(enum.Enum):
    UM = "um"
    BM = "bm"
    MM = "mm"


@dataclass(frozen=True)
class MutationStrategy:
    variant: Variant
    uniform: SelectionDistribution | None = None
    biased: SelectionDistribution | None = None

    def __post_init__(self):
        need_u = self.variant in (Variant.UM, Variant.MM)
        need_b = self.variant in (Variant.BM, Variant.MM)
        if need_u != (self.uniform is not None) or need_b != (self.biased is not None):
            raise UsageError(f"{self.variant.name} carries the wrong set of distributions")

    @classmethod
    def for_graph(cls, graph: Graph, variant: Variant | str, seed: int = 0) -> "MutationStrategy":
        """Build the strategy; the ranking is computed once here and frozen.

        Single-objective graphs rank by weight, bi-objective graphs by
        domination number.
        """
        variant = Variant(variant) if isinstance(variant, str) else variant
        uni = bia = None
        if variant in (Variant.UM, Variant.MM):
            uni = uniform_distribution(graph.m)
        if variant in (Variant.BM, Variant.MM):
            ranker = rank_by_weight if graph.weight_dim == 1 else rank_by_domination
            bia = biased_distribution(ranker(graph, seed), graph.n)
        return cls(variant, uni, bia)


def sample_k(rng: random.Random) -> int:
    """1 + Poisson(1), by multiplying uniforms until the product drops below e^-1."""
    k = 1
    p = rng.random()
    while p > _EXP_M1:
        k += 1
        p *= rng.random()
    return k


def choose_distribution(strategy: MutationStrategy, rng: random.Random) -> SelectionDistribution:
    v = strategy.variant
    if v is Variant.UM:
        return strategy.uniform
    if v is Variant.BM:
        return strategy.biased
    return strategy.biased if rng.random() < 0.5 else strategy.uniform


def mutate_inplace(tree: SpanningTree, strategy: MutationStrategy, rng: random.Random) -> list[tuple[int, int]]:
    """Mutate ``tree`` in place; return the (inserted, dropped) exchanges that changed it."""
    k = sample_k(rng)
    dist = choose_distribution(strategy, rng)
    swaps = []
    for _ in range(k):
        e = dist.sample(rng)
        f = tree.insert_inplace(e, rng)
        if f is not None:
            swaps.append((e, f))
    return swaps


def mutate(tree: SpanningTree, strategy: MutationStrategy, rng: random.Random) -> SpanningTree:
    out = tree.copy()
    mutate_inplace(out, strategy, rng)
    return out
