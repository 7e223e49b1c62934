"""Where biased mutation breaks down: G2, whose cheap clique pushes the tail
edges to ranks around n^2/8.

Part one evaluates the largest tail-edge selection probability for a range
of n. Part two runs BM and UM from initial trees that contain a bottom
edge and reports how many runs reach the MST within their budgets.

    python3 scripts/bm_blowup.py --run-n 256 --seeds 10
"""

import argparse
import random

from mstbias import MutationStrategy, bad_edge_count, biased_distribution, gen_triangular_tailed, kruskal_mst
from mstbias import random_spanning_tree, rank_by_weight, run_one_plus_one
from mstbias.experiments import derive_seed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="32,64,128,192,208,256")
    ap.add_argument("--run-n", type=int, default=256)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--bm-budget", type=int, default=10**6)
    ap.add_argument("--um-budget", type=int, default=10**7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("largest tail-edge q_b on G2")
    for n in map(int, args.sizes.split(",")):
        g = gen_triangular_tailed(n, "g2")
        q = biased_distribution(rank_by_weight(g, 0), n).probs
        print(f"  n={n:<4d} m={g.m:<6d} max q_b={max(q[e] for e in g.meta['tail_edges']):.3e}")

    n = args.run_n
    g = gen_triangular_tailed(n, "g2")
    target = kruskal_mst(g)[1]
    seeds, i = [], 0
    while len(seeds) < args.seeds:
        s = derive_seed(args.seed, i)
        i += 1
        if bad_edge_count(random_spanning_tree(g, random.Random(s))) > 0:
            seeds.append(s)
    wins = {"bm": 0, "um": 0}
    for s in seeds:
        for variant, budget in (("bm", args.bm_budget), ("um", args.um_budget)):
            rec = run_one_plus_one(g, MutationStrategy.for_graph(g, variant, s), budget, random.Random(s), target)
            wins[variant] += rec.success
            left = bad_edge_count(rec.extra["tree"])
            print(f"  seed {s % 10**6:06d} {variant.upper()} success={rec.success} "
                  f"iterations={rec.iterations} bad edges left={left}")
    print(f"n={n}: BM reached the MST in {wins['bm']}/{len(seeds)} runs (budget {args.bm_budget}), "
          f"UM in {wins['um']}/{len(seeds)} (budget {args.um_budget})")


if __name__ == "__main__":
    main()
