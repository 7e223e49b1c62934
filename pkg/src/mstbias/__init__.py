"""Unbiased, biased and mixed edge-exchange mutation for evolutionary
algorithms on the single- and bi-objective minimum spanning tree problem."""

from .ea import RunRecord, bad_edge_count, default_budget, run_one_plus_one
from .generators import (
    InstanceSpec,
    gen_lollipop,
    gen_random,
    gen_triangular_tailed,
    gen_triangular_tailed_mo,
)
from .graph import (
    Dominance,
    Graph,
    InstanceError,
    SpanningTree,
    UsageError,
    dominance,
    insert_and_break_cycle,
    is_spanning_tree,
    random_spanning_tree,
    tree_weight,
)
from .gsemo import ParetoArchive, archive_insert, run_gsemo, s_count
from .mutation import MutationStrategy, Variant, choose_distribution, mutate, sample_k
from .oracles import (
    enumerate_spanning_trees,
    exact_pareto_front,
    kirchhoff_count,
    kruskal_mst,
    triangular_tailed_front,
    weighted_sum_front,
)
from .ranking import (
    EdgeRanking,
    SelectionDistribution,
    biased_distribution,
    domination_number,
    rank_by_domination,
    rank_by_weight,
    uniform_distribution,
)
