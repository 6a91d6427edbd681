"""Hessian sign suite over every region/pair-set/degree configuration.

usage: python scripts/hessian_suite.py [--n 10000] [--seed 0] [--out suite.json]
"""
import argparse
import json
import time

from hardcore.sweeps import SUITE_CONFIGS, hessian_sign_suite


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    rows = []
    for region, pairs, deg in SUITE_CONFIGS:
        t0 = time.perf_counter()
        res = hessian_sign_suite(region, pairs, deg, n=args.n, seed=args.seed + deg)
        rows.append(res.to_dict())
        print(
            f"{region:6s} {pairs:13s} D={deg}  points {res.n_points}  violations {res.violations}  "
            f"min det {res.min_det:.3e}  ({time.perf_counter() - t0:.2f}s)"
        )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
