import collections
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mstbias import (
    Graph,
    UsageError,
    biased_distribution,
    domination_number,
    gen_triangular_tailed,
    gen_triangular_tailed_mo,
    rank_by_domination,
    rank_by_weight,
    uniform_distribution,
)
from mstbias.ranking import (
    DistKind,
    EdgeRanking,
    RankBasis,
    rank_probability,
    uniform_probabilities_exact,
    write_distribution_csv,
)

from helpers import random_connected_graph


def path_graph(weights):
    n = len(weights) + 1
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), tuple(weights))


def test_rank_by_weight_strict():
    assert rank_by_weight(path_graph([(5,), (1,), (3,)])).rank == (3, 1, 2)


def test_rank_by_weight_ties_are_fair():
    g = path_graph([(2,), (2,)])
    counts = collections.Counter(rank_by_weight(g, s).rank for s in range(10000))
    assert set(counts) == {(1, 2), (2, 1)}
    assert abs(counts[(1, 2)] / 10000 - 0.5) < 4 * math.sqrt(0.25 / 10000)


def test_rank_by_weight_g1_tail_first():
    n = 32
    g = gen_triangular_tailed(n, "g1")
    ranking = rank_by_weight(g, 7)
    tail = g.meta["tail_edges"]
    assert all(ranking.rank[e] <= 3 * n // 4 for e in tail)
    assert all(ranking.rank[e] > 3 * n // 4 for e in g.meta["clique_edges"])


def test_rank_by_weight_rejects_biobjective():
    with pytest.raises(UsageError):
        rank_by_weight(path_graph([(1, 2)]))


def test_domination_number_examples():
    assert domination_number(path_graph([(1, 2), (2, 1), (3, 3)])) == [1, 1, 3]
    assert domination_number(path_graph([(4, 4)] * 5)) == [5] * 5
    with pytest.raises(UsageError):
        domination_number(path_graph([(1,)]))


def test_domination_number_g1m():
    n = 16
    g = gen_triangular_tailed_mo(n, "g1m")
    d = domination_number(g)
    assert all(d[e] <= 3 * n // 4 for e in g.meta["tail_edges"])
    assert all(d[e] == g.m for e in g.meta["clique_edges"])


def test_rank_by_domination_forced_order():
    g = path_graph([(1, 2), (2, 1), (3, 3)])
    seen = {rank_by_domination(g, s).rank for s in range(50)}
    assert seen == {(1, 2, 3), (2, 1, 3)}


def test_rank_by_domination_g2m_places_gs_after_tail():
    n, l = 16, 7
    g = gen_triangular_tailed_mo(n, "g2m", l=l)
    ranking = rank_by_domination(g, 3)
    eta3 = 3 * n // 4
    assert {ranking.rank[e] for e in g.meta["tail_edges"]} == set(range(1, eta3 + 1))
    assert {ranking.rank[e] for e in g.meta["gs_edges"]} == set(range(eta3 + 1, eta3 + l + 1))


def test_rank_by_domination_all_equal_is_uniform_permutation():
    g = path_graph([(2, 2)] * 3)
    counts = collections.Counter(rank_by_domination(g, s).rank for s in range(6000))
    assert len(counts) == 6
    assert all(abs(c / 6000 - 1 / 6) < 0.02 for c in counts.values())


def test_biased_two_edges():
    ranking = EdgeRanking((1, 2), RankBasis.WEIGHT, 0)
    dist = biased_distribution(ranking, 2)
    assert dist.probs == pytest.approx((0.58579, 0.41421), abs=1e-5)
    # hand evaluation of the closed form
    s = math.sqrt(0.5) + 0.5
    assert dist.probs[0] == pytest.approx(math.sqrt(0.5) / s, abs=1e-15)
    assert dist.kind is DistKind.BIASED_SINGLE and dist.base == 0.5


def test_high_rank_is_exponentially_rare():
    n = 32
    m = 1200
    rank = tuple(range(1, m + 1))
    dist = biased_distribution(EdgeRanking(rank, RankBasis.WEIGHT, 0), n)
    q = dist.probs[1023]
    a = 31 / 32
    oracle = a ** 512 / math.fsum(a ** (i / 2) for i in range(1, m + 1))
    assert q == pytest.approx(oracle, rel=1e-12)
    assert q < 1e-8
    assert q == pytest.approx(rank_probability(1024, m, n), rel=1e-12)


@pytest.mark.parametrize("n", [16, 32, 64, 128, 256])
def test_low_ranks_are_theta_one_over_n(n):
    m = n * n // 4  # dense enough that the tail of the normaliser is irrelevant
    for r in range(1, 2 * n + 1):
        q = rank_probability(r, m, n)
        assert 0.05 / n <= q <= 20 / n


def test_uniform_distribution_examples():
    assert uniform_distribution(4).probs == (0.25,) * 4
    assert uniform_distribution(1).probs == (1.0,)
    assert uniform_distribution(7).kind is DistKind.UNIFORM
    for m in (1, 3, 7, 100):
        assert sum(uniform_probabilities_exact(m)) == Fraction(1)
    with pytest.raises(UsageError):
        uniform_distribution(0)


@st.composite
def rankings(draw):
    m = draw(st.integers(1, 60))
    basis = draw(st.sampled_from(list(RankBasis)))
    perm = draw(st.permutations(range(1, m + 1)))
    n = draw(st.integers(2, 200))
    return EdgeRanking(tuple(perm), basis, 0), n


@given(rankings())
def test_biased_distribution_properties(args):
    ranking, n = args
    dist = biased_distribution(ranking, n)
    assert abs(math.fsum(dist.probs) - 1.0) <= 1e-12
    assert all(p > 0 for p in dist.probs)
    a = (n - 1) / n
    ratio = math.sqrt(a) if ranking.basis is RankBasis.WEIGHT else a
    by_rank = [dist.probs[e] for e in ranking.order()]
    for lo, hi in zip(by_rank, by_rank[1:]):
        assert lo >= hi
        assert abs(hi / lo - ratio) <= 1e-12


@given(st.integers(3, 10), st.integers(0, 10**6), st.integers(0, 1000))
def test_rankings_are_valid_and_deterministic(n, gseed, tseed):
    rng = random.Random(gseed)
    g1 = random_connected_graph(n, 0.6, rng, wmax=4)
    r1 = rank_by_weight(g1, tseed)
    assert sorted(r1.rank) == list(range(1, g1.m + 1))
    assert r1 == rank_by_weight(g1, tseed)
    w = g1.column(0)
    order = r1.order()
    assert all(w[a] <= w[b] for a, b in zip(order, order[1:]))

    g2 = random_connected_graph(n, 0.6, rng, dim=2, wmax=4)
    r2 = rank_by_domination(g2, tseed)
    assert sorted(r2.rank) == list(range(1, g2.m + 1))
    assert r2 == rank_by_domination(g2, tseed)
    d = domination_number(g2)
    order = r2.order()
    assert all(d[a] <= d[b] for a, b in zip(order, order[1:]))


def test_sampling_matches_probabilities():
    ranking = EdgeRanking((3, 1, 2, 4), RankBasis.DOMINATION, 0)
    dist = biased_distribution(ranking, 3)
    rng = random.Random(0)
    N = 200000
    counts = collections.Counter(dist.sample(rng) for _ in range(N))
    for e, p in enumerate(dist.probs):
        assert abs(counts[e] / N - p) < 4 * math.sqrt(p * (1 - p) / N)


def test_distribution_csv(tmp_path):
    g = path_graph([(1, 2), (2, 1), (3, 3)])
    ranking = rank_by_domination(g, 0)
    dist = biased_distribution(ranking, g.n)
    out = tmp_path / "d.csv"
    write_distribution_csv(out, dist)
    lines = out.read_text().splitlines()
    assert lines[0] == "edge_id,rank,d,prob"
    assert lines[3].split(",")[:3] == ["2", "3", "3"]
