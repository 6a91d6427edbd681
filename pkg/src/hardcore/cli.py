"""Command-line entry point: ``hardcore <subcommand> [--flags]``.

JSON goes to stdout (or ``--out``); grid and series commands also write CSV
with ``--format csv``.  Every numeric report carries a ``tolerances`` block.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import fields
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import config as C
from .exact import BudgetExceeded, class_measures, independence_polynomial, partition_function
from .glauber import bottleneck_ratio, run_chain
from .graphs import blowup, erdos_renyi, format_edge_list, generate_bipartite_regular, load_graph
from .surfaces import phase_scan, surface_scan, verify_condition
from .tree import (
    COINCIDE_TOL,
    above_critical,
    contraction_factor,
    fixed_points,
    lambda_c,
    lambda_half,
    lambda_half_from_marginal,
)


class UsageError(Exception):
    pass


def parse_number(text) -> Fraction | float:
    """Rationals such as ``3``, ``1/2`` or ``0.25`` stay exact; anything else becomes a float."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        return text
    try:
        return Fraction(str(text))
    except ValueError:
        return float(text)


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def _rows_to_csv(rows: list[dict]) -> str:
    keys: list[str] = []
    for r in rows:
        keys.extend(k for k in r if k not in keys)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r.get(k) is None else r.get(k)) for k in keys})
    return buf.getvalue()


def _emit(payload, out: str | None, fmt: str = "json", rows: list[dict] | None = None) -> None:
    if fmt == "csv":
        if rows is None:
            raise UsageError("--format csv is not available for this command")
        text = _rows_to_csv(rows)
    else:
        text = json.dumps(payload, indent=2, default=_json_default) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    if not path:
        raise UsageError("--graph is required")
    return load_graph(path)


# ---------------------------------------------------------------- commands


def cmd_thresholds(cfg: C.ThresholdsConfig, args) -> dict:
    lc = lambda_c(cfg.delta)
    lh = lambda_half(cfg.delta, step=cfg.step, xtol=cfg.xtol)
    return {
        "delta": cfg.delta,
        "lambda_c": lc,
        "lambda_c_float": float(lc),
        "lambda_half": lh,
        "lambda_half_from_marginal": lambda_half_from_marginal(cfg.delta),
        "tolerances": {"lambda_c": "exact rational", "lambda_half_xtol": cfg.xtol, "scan_step": cfg.step},
    }


def cmd_fixed_points(cfg: C.FixedPointsConfig, args) -> dict:
    lam = parse_number(cfg.lam)
    cp = fixed_points(lam, cfg.delta)
    out = cp.to_dict()
    out["above_critical"] = above_critical(lam, cfg.delta)
    out["contraction_factor"] = contraction_factor(lam, cfg.delta) if out["above_critical"] else None
    out["q_plus_q_minus"] = cp.q_plus * cp.q_minus
    out["tolerances"] = {"root_xtol": 1e-17, "coincide_tol": COINCIDE_TOL}
    return out


def cmd_exact_z(cfg: C.ExactZConfig, args):
    g = _load(cfg.graph)
    lam = parse_number(cfg.lam)
    z = partition_function(g, lam)
    out = {"n_vertices": g.n_vertices, "n_edges": g.n_edges, "lambda": lam, "Z": z, "Z_float": float(z)}
    rows = None
    if g.bipartition is not None:
        poly = independence_polynomial(g)
        out["bivariate_total"] = poly.total()
        rows = [{"a": a, "b": b, "count": c} for a, row in enumerate(poly.counts) for b, c in enumerate(row) if c]
    out["tolerances"] = {"Z": "exact" if isinstance(z, Fraction) else "single final rounding"}
    return out, rows


def cmd_class_measures(cfg: C.ClassMeasuresConfig, args) -> dict:
    g = _load(cfg.graph)
    lam, slack = parse_number(cfg.lam), parse_number(cfg.slack)
    cm = class_measures(g, lam, slack)
    br = bottleneck_ratio(g, lam, slack)
    return {
        "lambda": lam,
        "slack": slack,
        "mu_1": cm.mu_1,
        "mu_2": cm.mu_2,
        "mu_B": cm.mu_B,
        "bottleneck": br.to_dict(),
        "tolerances": {"measures": "exact" if isinstance(cm.mu_1, Fraction) else "single final rounding"},
    }


def cmd_blowup_check(cfg: C.BlowupCheckConfig, args) -> dict:
    rng = np.random.default_rng(np.uint64(cfg.seed))
    lams = [parse_number(x) for x in cfg.lams]
    if any(not isinstance(x, Fraction) for x in lams):
        raise UsageError("blowup-check needs rational activities")
    results = []
    for t in range(cfg.trials):
        n = int(rng.integers(1, cfg.max_vertices + 1))
        g = erdos_renyi(n, cfg.edge_prob, int(rng.integers(2**32)))
        h = blowup(g, cfg.k)
        for lam in lams:
            lhs = partition_function(g, (1 + lam) ** cfg.k - 1)
            rhs = partition_function(h, lam)
            results.append({"trial": t, "n": n, "edges": g.n_edges, "lambda": lam, "equal": lhs == rhs})
    passes = sum(r["equal"] for r in results)
    return {
        "k": cfg.k,
        "trials": cfg.trials,
        "checks": len(results),
        "passes": passes,
        "all_equal": passes == len(results),
        "results": results,
        "tolerances": {"identity": "exact rational equality"},
    }


def cmd_surface_scan(cfg: C.SurfaceScanConfig, args):
    rows = surface_scan(cfg.lam, cfg.delta, cfg.resolution, cfg.alpha, cfg.beta)
    out = {"delta": cfg.delta, "lambda": cfg.lam, "rows": rows, "tolerances": {"grid": "cell centres"}}
    return out, rows


def cmd_verify_condition(cfg: C.VerifyConditionConfig, args) -> dict:
    res = verify_condition(
        cfg.lam, cfg.delta, n_starts=cfg.n_starts, seed=cfg.seed, alpha=cfg.alpha, beta=cfg.beta,
        point_tol=cfg.point_tol, value_tol=cfg.value_tol,
    )
    return res.to_dict()


def cmd_phase_scan(cfg: C.PhaseScanConfig, args):
    rows = phase_scan(cfg.delta, cfg.lams, slack=cfg.slack, n_starts=cfg.n_starts, seed=cfg.seed)
    out = {
        "delta": cfg.delta,
        "rows": rows,
        "tolerances": {"coincide_tol": COINCIDE_TOL, "reduced_starts": cfg.n_starts},
    }
    return out, rows


def cmd_certify(cfg: C.CertifyConfig, args):
    from .certify import list_claims, run_claim

    if args.list:
        return {"claims": list_claims()}, list_claims()
    if not cfg.claim:
        raise UsageError("--claim is required (or --list)")
    try:
        rep = run_claim(cfg.claim, margin=Fraction(cfg.margin), max_depth=cfg.depth, max_cells=cfg.max_cells)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    out = rep.to_dict()
    out["tolerances"] = {"margin": cfg.margin, "rounding": "outward", "witness_check": "exact rational"}
    return out, None


def cmd_glauber(cfg: C.GlauberConfig, args):
    g = load_graph(cfg.graph) if cfg.graph else generate_bipartite_regular(cfg.n, cfg.delta, cfg.graph_seed)
    st = run_chain(
        g, cfg.lam, cfg.steps, burn_in=cfg.burn_in, sample_stride=cfg.stride, seed=cfg.seed,
        start=cfg.start, band=cfg.band,
    )
    out = st.to_dict(series=False)
    out["tolerances"] = {"band": cfg.band}
    rows = [{"sample": i, "imbalance": x, "occupancy": y}
            for i, (x, y) in enumerate(zip(st.imbalance_series, st.occupancy_series))]
    if args.series_out:
        Path(args.series_out).write_text(_rows_to_csv(rows))
        out["series_path"] = args.series_out
    return out, rows


def cmd_gen_graph(cfg: C.GenGraphConfig, args):
    g = generate_bipartite_regular(cfg.n, cfg.delta, cfg.seed)
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
        summary = {"command": "gen-graph", "config": C.config_to_dict(cfg), "edges": g.n_edges, "path": args.out}
        sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return None, None


COMMANDS = {
    "thresholds": cmd_thresholds,
    "fixed-points": cmd_fixed_points,
    "exact-z": cmd_exact_z,
    "class-measures": cmd_class_measures,
    "blowup-check": cmd_blowup_check,
    "surface-scan": cmd_surface_scan,
    "verify-condition": cmd_verify_condition,
    "phase-scan": cmd_phase_scan,
    "certify": cmd_certify,
    "glauber": cmd_glauber,
    "gen-graph": cmd_gen_graph,
}

# flag names that differ from the config field names
_FLAG = {"lam": "lambda", "lams": "lambdas"}


def _add_config_flags(p: argparse.ArgumentParser, cls) -> None:
    for f in fields(cls):
        flag = "--" + _FLAG.get(f.name, f.name).replace("_", "-")
        kind = str(f.type)
        if kind.startswith("list"):
            elem = float if "float" in kind else str
            p.add_argument(flag, dest=f.name, nargs="+", type=elem, default=None)
        elif "int" in kind and "float" not in kind:
            p.add_argument(flag, dest=f.name, type=int, default=None)
        elif "float" in kind:
            p.add_argument(flag, dest=f.name, type=float, default=None)
        else:
            p.add_argument(flag, dest=f.name, type=str, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hardcore", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, cls in C.CONFIGS.items():
        p = sub.add_parser(name, allow_abbrev=False)
        _add_config_flags(p, cls)
        p.add_argument("--config", default=None, help="JSON file with parameters (flags override it)")
        p.add_argument("--out", default=None, help="write the artifact here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "glauber":
            p.add_argument("--series-out", default=None, help="also write the sampled series as CSV")
        if name == "certify":
            p.add_argument("--list", action="store_true", help="print the claim registry")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cls = C.CONFIGS[args.command]
    overrides = {f.name: getattr(args, f.name) for f in fields(cls)}
    try:
        file_values = C.load_config_file(args.config) if args.config else None
        cfg = C.build_config(args.command, file_values, overrides)
        result = COMMANDS[args.command](cfg, args)
        payload, rows = result if isinstance(result, tuple) else (result, None)
        if payload is not None:
            if isinstance(payload, dict):
                payload = {"command": args.command, "config": C.config_to_dict(cfg), **payload}
            _emit(payload, args.out, args.format, rows)
    except (UsageError, ValueError, KeyError, BudgetExceeded, OSError) as exc:
        print(f"hardcore {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
