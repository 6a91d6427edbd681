"""Bottleneck ratios and mode crossings of Glauber dynamics on random bipartite regular graphs.

usage: python scripts/glauber_bimodality.py [--n 12] [--delta 3] [--lams 1 2 4 6 10] [--seeds 20]
"""
import argparse

import numpy as np

from hardcore.glauber import bottleneck_ratio, run_chain
from hardcore.graphs import generate_bipartite_regular


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--delta", type=int, default=3)
    ap.add_argument("--lams", nargs="+", type=float, default=[1.0, 2.0, 4.0, 6.0, 10.0])
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--steps", type=int, default=1_000_000)
    ap.add_argument("--band", type=float, default=0.2)
    args = ap.parse_args()
    ratios = np.empty((args.seeds, len(args.lams)))
    crossings = np.empty_like(ratios)
    for s in range(args.seeds):
        g = generate_bipartite_regular(args.n, args.delta, s)
        for j, lam in enumerate(args.lams):
            ratios[s, j] = bottleneck_ratio(g, lam, args.band).ratio
            crossings[s, j] = run_chain(g, lam, args.steps, seed=s, start="side1-full", band=args.band).crossings
    print(f"n={args.n} Delta={args.delta} band={args.band} seeds={args.seeds} steps={args.steps}")
    print(f"{'lambda':>8s} {'median ratio':>13s} {'min ratio':>10s} {'max ratio':>10s} {'mean crossings':>15s}")
    for j, lam in enumerate(args.lams):
        r = ratios[:, j]
        print(f"{lam:8.2f} {np.median(r):13.4g} {r.min():10.4g} {r.max():10.4g} {crossings[:, j].mean():15.1f}")
    mono = np.all(np.diff(ratios, axis=1) < 0, axis=1).sum()
    print(f"ratio strictly decreasing in lambda on {mono}/{args.seeds} seeds")


if __name__ == "__main__":
    main()
