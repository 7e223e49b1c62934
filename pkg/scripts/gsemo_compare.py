"""GSEMO with uniform vs domination-biased mutation on G1M and G2M.

Runs with the same index share a seed, so the per-family comparison is a
paired one-sided Wilcoxon test (biased faster than uniform).

    python3 scripts/gsemo_compare.py --sizes 8,12,16,20 --reps 100
"""

import argparse

import numpy as np
from scipy.stats import wilcoxon

from mstbias.experiments import fit_power_law, run_replicates, write_records_csv
from mstbias.generators import gen_triangular_tailed_mo


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,12,16,20")
    ap.add_argument("--reps", type=int, default=100)
    ap.add_argument("--budget", type=int, default=10**7)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="gsemo.csv")
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    records = []
    for family in ("g1m", "g2m"):
        medians = {"um": [], "bm": []}
        for n in sizes:
            g = gen_triangular_tailed_mo(n, family)
            its = {}
            for variant in ("um", "bm"):
                recs = run_replicates(g, "gsemo", variant, args.budget, args.reps, args.seed, args.workers,
                                      index_prefix=(n,))
                records += recs
                its[variant] = np.array([r.iterations for r in recs])
                medians[variant].append(float(np.median(its[variant])))
            p = wilcoxon(its["bm"], its["um"], alternative="less").pvalue
            print(f"{family.upper()} n={n:<3d} median UM={medians['um'][-1]:<9g} BM={medians['bm'][-1]:<9g} p={p:.2e}")
        if len(sizes) > 1:
            a_um = fit_power_law(sizes, medians["um"])[0]
            a_bm = fit_power_law(sizes, medians["bm"])[0]
            print(f"{family.upper()} fitted exponent UM={a_um:.2f} BM={a_bm:.2f}")
    write_records_csv(args.out, records)


if __name__ == "__main__":
    main()
