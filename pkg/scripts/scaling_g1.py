"""Runtime scaling of the (1+1) EA with uniform vs biased mutation on G1.

Prints per-n medians, the fitted exponent over all sizes and the local
slope between consecutive sizes, and writes every run to CSV.

    python3 scripts/scaling_g1.py --sizes 16,32,64,128,256 --reps 50 --out scaling.csv
"""

import argparse

import numpy as np

from mstbias.experiments import runtime_scaling, write_records_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="16,32,64,128")
    ap.add_argument("--reps", type=int, default=50)
    ap.add_argument("--family", default="g1")
    ap.add_argument("--variants", default="um,bm")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="scaling.csv")
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    records = []
    for variant in args.variants.split(","):
        res = runtime_scaling("ea", variant, args.family, sizes, args.reps, args.seed, workers=args.workers)
        records += res.records
        meds = [s["median"] for s in res.stats]
        print(f"{variant.upper()} on {args.family.upper()}: alpha={res.alpha:.3f}")
        for i, st in enumerate(res.stats):
            local = "" if i == 0 else f"  local slope {np.log(meds[i] / meds[i - 1]) / np.log(sizes[i] / sizes[i - 1]):.2f}"
            print(f"  n={st['n']:<4d} median={st['median']:<10g} success={st['success_rate']:.2f}{local}")
    write_records_csv(args.out, records)


if __name__ == "__main__":
    main()
