"""Scan lambda across the critical activity and report where Phi2 has a non-trivial maximiser.

usage: python scripts/phase_scan.py [--deltas 3 4 5 6] [--factors 0.9 1.05 1.5 3 10]
"""
import argparse

from hardcore.surfaces import phase_scan
from hardcore.tree import lambda_c, lambda_half


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--deltas", nargs="+", type=int, default=[3, 4, 5, 6])
    ap.add_argument("--factors", nargs="+", type=float, default=[0.9, 1.05, 1.5, 3.0, 10.0])
    ap.add_argument("--n-starts", type=int, default=60)
    args = ap.parse_args()
    for d in args.deltas:
        lc = float(lambda_c(d))
        print(f"Delta={d}  lambda_c={lc:.6f}  lambda_half={lambda_half(d):.6f}")
        for row in phase_scan(d, [f * lc for f in args.factors], n_starts=args.n_starts):
            print("   ", "  ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
