"""Run every registry claim at the default depth and escalate undecided ones.

usage: python scripts/certify_all.py [--margin 1/100] [--depths 24 28 32 40 48] [--out results.json]
"""
import argparse
import json
from fractions import Fraction

from hardcore.certify import REGISTRY, Status, run_claim


def certify_with_escalation(claim_id: str, margin: Fraction, depths) -> list[dict]:
    runs = []
    for depth in depths:
        rep = run_claim(claim_id, margin=margin, max_depth=depth)
        d = rep.to_dict()
        d.pop("undecided_sample")
        runs.append(d)
        if rep.status is not Status.UNDECIDED:
            break
    return runs


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--margin", default="1/100")
    ap.add_argument("--depths", nargs="+", type=int, default=[24, 28, 32, 40, 48])
    ap.add_argument("--claims", nargs="*", default=None)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    results = {}
    for cid in args.claims or REGISTRY:
        runs = certify_with_escalation(cid, Fraction(args.margin), args.depths)
        results[cid] = runs
        last = runs[-1]
        trail = " -> ".join(f"{r['status']}@{r['max_depth']}" for r in runs)
        print(
            f"{cid:22s} expected {REGISTRY[cid].expected:10s} {trail:45s} "
            f"cells {last['cells_processed']:>9d}  {sum(r['elapsed_seconds'] for r in runs):7.1f}s"
        )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
