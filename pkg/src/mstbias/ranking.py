"""Edge ranks and edge-selection distributions.

Biased selection favours low-rank edges geometrically with base
``a = (n-1)/n``: the single-objective operator uses ``sqrt(a**r)``, the
bi-objective one ``a**r`` (rank by domination number).
"""

from __future__ import annotations

import bisect
import csv
import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph, UsageError, weakly_dominates


class RankBasis(enum.Enum):
    WEIGHT = "single_objective_weight"
    DOMINATION = "domination_number"


@dataclass(frozen=True)
class EdgeRanking:
    rank: tuple[int, ...]  # rank[e] in 1..m
    basis: RankBasis
    tie_seed: int
    keys: tuple = ()  # weight or domination number per edge

    def edge_at(self, r: int) -> int:
        return self.rank.index(r)

    def order(self) -> list[int]:
        """Edge ids sorted by rank."""
        out = [0] * len(self.rank)
        for e, r in enumerate(self.rank):
            out[r - 1] = e
        return out


def _rank_with_ties(keys: Sequence, seed: int) -> tuple[int, ...]:
    m = len(keys)
    tiebreak = list(range(m))
    random.Random(seed).shuffle(tiebreak)
    order = sorted(range(m), key=lambda e: (keys[e], tiebreak[e]))
    rank = [0] * m
    for r, e in enumerate(order, start=1):
        rank[e] = r
    return tuple(rank)


def rank_by_weight(graph: Graph, seed: int = 0) -> EdgeRanking:
    if graph.weight_dim != 1:
        raise UsageError("rank_by_weight needs single-objective weights")
    keys = tuple(graph.column(0))
    return EdgeRanking(_rank_with_ties(keys, seed), RankBasis.WEIGHT, seed, keys)


def domination_number(graph: Graph) -> list[int]:
    """d(e): number of edges (e included) whose weight weakly dominates w(e)."""
    if graph.weight_dim != 2:
        raise UsageError("domination_number needs bi-objective weights")
    ws = graph.weights
    return [sum(1 for w2 in ws if weakly_dominates(w2, w)) for w in ws]


def rank_by_domination(graph: Graph, seed: int = 0) -> EdgeRanking:
    keys = tuple(domination_number(graph))
    return EdgeRanking(_rank_with_ties(keys, seed), RankBasis.DOMINATION, seed, keys)


class DistKind(enum.Enum):
    UNIFORM = "uniform"
    BIASED_SINGLE = "biased_single"
    BIASED_MULTI = "biased_multi"


@dataclass(frozen=True)
class SelectionDistribution:
    probs: tuple[float, ...]
    kind: DistKind
    base: float | None = None
    ranking: EdgeRanking | None = None

    def __post_init__(self):
        cum = []
        acc = 0.0
        for p in self.probs:
            acc += p
            cum.append(acc)
        object.__setattr__(self, "_cum", cum)

    @property
    def m(self) -> int:
        return len(self.probs)

    def sample(self, rng: random.Random) -> int:
        if self.kind is DistKind.UNIFORM:
            return int(rng.random() * len(self.probs))
        cum = self._cum
        i = bisect.bisect_right(cum, rng.random() * cum[-1])
        return i if i < len(cum) else len(cum) - 1


def uniform_distribution(m: int) -> SelectionDistribution:
    if m < 1:
        raise UsageError("need at least one edge")
    return SelectionDistribution(tuple([1.0 / m] * m), DistKind.UNIFORM)


def uniform_probabilities_exact(m: int) -> list[Fraction]:
    return [Fraction(1, m)] * m


def rank_weights(m: int, n: int, basis: RankBasis) -> list[float]:
    """Unnormalised selection weight of ranks 1..m."""
    a = (n - 1) / n
    if basis is RankBasis.WEIGHT:
        return [a ** (r / 2) for r in range(1, m + 1)]
    return [a ** r for r in range(1, m + 1)]


def biased_distribution(ranking: EdgeRanking, n: int) -> SelectionDistribution:
    if n < 2:
        raise UsageError("n must be at least 2")
    m = len(ranking.rank)
    per_rank = rank_weights(m, n, ranking.basis)
    total = math.fsum(per_rank)
    probs = tuple(per_rank[r - 1] / total for r in ranking.rank)
    assert abs(math.fsum(probs) - 1.0) <= 1e-12
    kind = DistKind.BIASED_SINGLE if ranking.basis is RankBasis.WEIGHT else DistKind.BIASED_MULTI
    return SelectionDistribution(probs, kind, (n - 1) / n, ranking)


def rank_probability(r: int, m: int, n: int, basis: RankBasis = RankBasis.WEIGHT) -> float:
    """Selection probability of the rank-``r`` edge among ``m``, straight from the formula."""
    a = (n - 1) / n
    if basis is RankBasis.WEIGHT:
        return a ** (r / 2) / math.fsum(a ** (i / 2) for i in range(1, m + 1))
    return a**r / math.fsum(a**i for i in range(1, m + 1))


def write_distribution_csv(path, dist: SelectionDistribution, ranking: EdgeRanking | None = None) -> None:
    ranking = ranking or dist.ranking
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["edge_id", "rank", "d", "prob"])
        for e, p in enumerate(dist.probs):
            rank = ranking.rank[e] if ranking else ""
            d = ranking.keys[e] if ranking and ranking.basis is RankBasis.DOMINATION else ""
            w.writerow([e, rank, d, repr(p)])
