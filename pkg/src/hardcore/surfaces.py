"""Numerical exploration of the moment surfaces: maximisers, gaps, the uncorrelated-maximum check."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import root

from . import moments as M
from .tree import above_critical, contraction_factor, fixed_points

# ----------------------------------------------------------- first moment


def _polish_stationary(a0: float, b0: float, lam: float, deg: int) -> tuple[float, float] | None:
    """Newton polish of a stationary point of phi1, in logit coordinates to stay inside the simplex."""

    def unpack(z):
        ex = np.exp(np.clip(z, -700, 700))
        tot = 1 + ex[0] + ex[1]
        return ex[0] / tot, ex[1] / tot

    z0 = np.log([a0 / (1 - a0 - b0), b0 / (1 - a0 - b0)])

    def fun(z):
        a, b = unpack(z)
        if min(a, b, 1 - a - b) <= 0:
            return [1e3, 1e3]
        return list(M.phi1_gradient(a, b, lam, deg))

    sol = root(fun, z0, method="hybr", options={"xtol": 1e-15})
    # a tight xtol makes hybr report failure even at an exact root, so judge by the residual
    if not np.all(np.isfinite(sol.fun)) or np.max(np.abs(sol.fun)) > 1e-9:
        return None
    a, b = unpack(sol.x)
    if min(a, b, 1 - a - b) <= 0:
        return None
    return a, b


def phi1_maximizer(lam: float, deg: int, grid: int = 400) -> tuple[float, float]:
    """Global maximiser of phi1 over the open simplex.

    A dense grid locates candidate basins; each candidate is polished to a
    stationary point and kept only if the Hessian there is negative definite.
    Mirror-image ties are broken toward alpha >= beta.
    """
    if not lam > 0:
        raise ValueError("activity must be positive")
    t = (np.arange(grid) + 0.5) / grid
    A, B = np.meshgrid(t, t, indexing="ij")
    mask = A + B < 1 - 0.5 / grid
    vals = np.full(A.shape, -np.inf)
    vals[mask] = M.phi1(A[mask], B[mask], lam, deg)
    flat = np.argsort(vals, axis=None)[::-1][:20]
    cands = []
    for idx in flat:
        i, j = np.unravel_index(idx, A.shape)
        for a0, b0 in ((A[i, j], B[i, j]), (B[i, j], A[i, j])):
            p = _polish_stationary(a0, b0, lam, deg)
            if p is None:
                continue
            daa, dbb, dab = M.phi1_hessian(*p, deg)
            if daa < 0 and daa * dbb - dab * dab > 0:
                cands.append((float(M.phi1(*p, lam, deg)), p))
    if not cands:
        raise RuntimeError("no local maximum found")
    best = max(v for v, _ in cands)
    ties = [p for v, p in cands if v >= best - 1e-12]
    # prefer alpha >= beta, then the largest alpha - beta
    a, b = max(ties, key=lambda p: (p[0] >= p[1] - 1e-12, p[0] - p[1]))
    return float(a), float(b)


def _zoom_extremum(fun, lo, hi, sense: int, n: int = 81, rounds: int = 8):
    """Grid search with successive zooms over a 2-d box; ``fun`` returns nan outside its domain."""
    lo, hi = np.asarray(lo, float), np.asarray(hi, float)
    best_val, best_pt = -np.inf, None
    for _ in range(rounds):
        xs = np.linspace(lo[0], hi[0], n)
        ys = np.linspace(lo[1], hi[1], n)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        V = sense * fun(X, Y)
        V = np.where(np.isnan(V), -np.inf, V)
        k = np.unravel_index(np.argmax(V), V.shape)
        if V[k] > best_val:
            best_val, best_pt = V[k], np.array([X[k], Y[k]])
        w = (hi - lo) / (n - 1) * 4
        lo, hi = best_pt - w, best_pt + w
    return sense * best_val, best_pt


def _phi1_masked(A, B, lam, deg, keep):
    out = np.full(A.shape, np.nan)
    ok = keep & (A > 0) & (B > 0) & (A + B < 1)
    if np.any(ok):
        out[ok] = M.phi1(A[ok], B[ok], lam, deg)
    return out


@dataclass(frozen=True)
class GapResult:
    tau: float
    ball_min: float
    band_max: float
    ball_argmin: tuple[float, float]
    band_argmax: tuple[float, float]


def phi1_gap(lam: float, deg: int, slack: float) -> GapResult:
    """tau = min of phi1 on the slack-ball at (p+, p-) minus max of phi1 on the band |alpha - beta| <= slack."""
    if not above_critical(lam, deg):
        raise ValueError("gap is only defined above lambda_c")
    cp = fixed_points(lam, deg)
    a0, b0 = cp.p_plus, cp.p_minus
    if min(a0, b0, 1 - a0 - b0) <= slack:
        raise ValueError("slack ball leaves the simplex")

    # ball in polar coordinates (radius, angle)
    def on_ball(Rr, T):
        return _phi1_masked(a0 + Rr * np.cos(T), b0 + Rr * np.sin(T), lam, deg, Rr <= slack)

    xmin, parg = _zoom_extremum(on_ball, (0.0, -np.pi), (slack, np.pi), sense=-1)

    # band in (mean, half-difference) coordinates
    def on_band(S, D):
        return _phi1_masked(S + D, S - D, lam, deg, np.abs(2 * D) <= slack)

    ymax, barg = _zoom_extremum(on_band, (0.0, -slack / 2), (0.5, slack / 2), sense=1)
    ball_pt = (float(a0 + parg[0] * np.cos(parg[1])), float(b0 + parg[0] * np.sin(parg[1])))
    band_pt = (float(barg[0] + barg[1]), float(barg[0] - barg[1]))
    return GapResult(float(xmin - ymax), float(xmin), float(ymax), ball_pt, band_pt)


# ----------------------------------------------------------- second moment


class Verdict(str, Enum):
    VERIFIED = "VerifiedNumerically"
    COUNTEREXAMPLE = "CounterexampleFound"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ConditionResult:
    verdict: Verdict
    alpha: float
    beta: float
    maximizer: tuple[float, float, float]
    value: float
    reference_value: float
    distance_to_reference: float
    n_starts: int
    n_converged: int
    tolerances: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        return d


def _con3_vertices(a: float, b: float) -> np.ndarray:
    """Vertices of the (gamma, delta) polygon, by clipping the box with the two diagonal half-planes."""
    poly = [(0.0, 0.0), (a, 0.0), (a, b), (0.0, b)]
    for sgn, off in ((1.0, 1 - 2 * b), (-1.0, 1 - 2 * a)):
        # keep points with sgn*(delta - gamma) + off > 0
        out = []
        for k in range(len(poly)):
            p, q = poly[k], poly[(k + 1) % len(poly)]
            fp = sgn * (p[1] - p[0]) + off
            fq = sgn * (q[1] - q[0]) + off
            if fp >= 0:
                out.append(p)
            if fp * fq < 0:
                t = fp / (fp - fq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        poly = out
    return np.array(poly)


def _starts(a: float, b: float, n_starts: int, rng: np.random.Generator, band: float) -> np.ndarray:
    """Grid points, a boundary-hugging band and uniform random points inside the polygon.

    Random points are added until at least ``n_starts`` feasible starts exist.
    """
    side = int(np.ceil(np.sqrt(n_starts)))
    t = (np.arange(side) + 0.5) / side
    G, Dl = np.meshgrid(t * a, t * b, indexing="ij")
    pts = [np.column_stack([G.ravel(), Dl.ravel()])]
    verts = _con3_vertices(a, b)
    centre = verts.mean(axis=0)
    m = max(8, n_starts // (2 * len(verts)))
    for k in range(len(verts)):
        p, q = verts[k], verts[(k + 1) % len(verts)]
        s = (np.arange(m) + 0.5) / m
        e = p + s[:, None] * (q - p)
        inward = centre - e
        inward /= np.linalg.norm(inward, axis=1, keepdims=True)
        pts.append(e + band * inward)
    P = np.vstack(pts)
    P = P[M.in_con3(a, b, P[:, 0], P[:, 1])]
    n_random = max(n_starts // 2, n_starts - len(P))
    found = []
    while sum(len(x) for x in found) < n_random:
        R = rng.uniform((0.0, 0.0), (a, b), size=(4 * n_random, 2))
        found.append(R[M.in_con3(a, b, R[:, 0], R[:, 1])])
    return np.vstack([P, np.vstack(found)[:n_random]])


def _ascend(P: np.ndarray, a, b, lam, deg, max_iter: int, gtol: float):
    """Vectorised damped-Newton ascent of f from many starts, staying strictly inside the polygon."""
    g, d = P[:, 0].copy(), P[:, 1].copy()
    val = M.f_value(g, d, a, b, lam, deg)
    active = np.ones(len(g), bool)
    for _ in range(max_iter):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        gg, dd = g[idx], d[idx]
        fg = M.f_gradient(gg, dd, a, b, deg)
        gr = np.column_stack([np.atleast_1d(fg.d_gamma), np.atleast_1d(fg.d_delta)])
        H = M.hessian(gg, dd, a, b, deg)
        h11, h22, h12 = (np.atleast_1d(np.asarray(x)) for x in (H.d2_gamma, H.d2_delta, H.d_cross))
        # shift to negative definite where needed
        tr, det = h11 + h22, h11 * h22 - h12**2
        lmax = 0.5 * (tr + np.sqrt(np.maximum(tr * tr - 4 * det, 0)))
        mu = np.where(lmax < 0, 0.0, lmax + 1e-8 + 1e-3 * np.abs(tr))
        a11, a22 = h11 - mu, h22 - mu
        dt = a11 * a22 - h12**2
        step = np.column_stack([-(a22 * gr[:, 0] - h12 * gr[:, 1]) / dt, -(-h12 * gr[:, 0] + a11 * gr[:, 1]) / dt])
        scale = np.array([a, b])
        done = np.max(np.abs(gr) * scale, axis=1) < gtol
        t = np.ones(len(idx))
        accepted = np.zeros(len(idx), bool)
        cur = val[idx]
        for _ in range(60):
            todo = ~accepted & ~done
            if not todo.any():
                break
            ng = gg + t * step[:, 0]
            nd = dd + t * step[:, 1]
            feas = todo & M.in_con3(a, b, ng, nd)
            nv = np.full(len(idx), -np.inf)
            if feas.any():
                nv[feas] = M.f_value(ng[feas], nd[feas], a, b, lam, deg)
            good = feas & (nv >= cur - 1e-15 * np.abs(cur))
            accepted |= good
            gg = np.where(good, ng, gg)
            dd = np.where(good, nd, dd)
            cur = np.where(good, nv, cur)
            t = np.where(todo & ~good, t * 0.5, t)
        g[idx], d[idx], val[idx] = gg, dd, cur
        # converged, or stuck (no acceptable step)
        active[idx[done | ~accepted]] = False
    fg = M.f_gradient(g, d, a, b, deg)
    gnorm = np.maximum(np.abs(np.atleast_1d(fg.d_gamma)) * a, np.abs(np.atleast_1d(fg.d_delta)) * b)
    return g, d, val, gnorm < gtol


def verify_condition(
    lam: float,
    deg: int,
    n_starts: int = 200,
    seed: int = 0,
    alpha: float | None = None,
    beta: float | None = None,
    max_iter: int = 200,
    point_tol: float = 1e-6,
    value_tol: float = 1e-9,
    band: float = 1e-4,
) -> ConditionResult:
    """Check numerically that f(gamma, delta) peaks at the uncorrelated point (alpha^2, beta^2).

    (alpha, beta) defaults to (p+, p-).  Multistart ascent of the reduced
    function f over the interior of the (gamma, delta) polygon; epsilon is
    reconstructed from its closed-form maximiser.
    """
    if alpha is None or beta is None:
        if not above_critical(lam, deg):
            raise ValueError("verify_condition needs lam > lambda_c unless (alpha, beta) is given")
        cp = fixed_points(lam, deg)
        alpha, beta = cp.p_plus, cp.p_minus
    rng = np.random.default_rng(seed)
    P = _starts(alpha, beta, n_starts, rng, band)
    g, d, val, conv = _ascend(P, alpha, beta, lam, deg, max_iter, gtol=1e-11)
    ref_pt = M.independent_overlap(alpha, beta)
    ref = float(M.f_value(ref_pt.gamma, ref_pt.delta, alpha, beta, lam, deg))
    k = int(np.argmax(val))
    best = (float(g[k]), float(d[k]))
    eps = float(M.eliminate_epsilon(alpha, beta, *best).eps_hat)
    dist = float(np.max(np.abs(np.array([best[0], best[1], eps]) - [ref_pt.gamma, ref_pt.delta, ref_pt.epsilon])))
    tol = {"point_tol": point_tol, "value_tol": value_tol, "gradient_tol": 1e-11, "boundary_band": band}
    exceed = val > ref + value_tol
    if exceed.any():
        verdict = Verdict.COUNTEREXAMPLE
    elif dist <= point_tol:
        verdict = Verdict.VERIFIED
    else:
        verdict = Verdict.INCONCLUSIVE
    return ConditionResult(
        verdict, float(alpha), float(beta), (best[0], best[1], eps), float(val[k]), ref, dist,
        int(len(P)), int(conv.sum()), tol,
    )


def neighbourhood_sweep(lam: float, deg: int, radius: float = 1e-3, points: int = 5, n_starts: int = 200, seed: int = 0):
    """Run verify_condition on a points x points grid of (alpha, beta) around (p+, p-)."""
    cp = fixed_points(lam, deg)
    offs = np.linspace(-radius, radius, points)
    return [
        verify_condition(lam, deg, n_starts, seed, cp.p_plus + da, cp.p_minus + db)
        for da in offs
        for db in offs
    ]


# --------------------------------------------------------------- tables


def surface_scan(lam: float, deg: int, resolution: int = 50, alpha: float | None = None, beta: float | None = None):
    """Rows (gamma, delta, f, det, region) on a grid over the interior of the (gamma, delta) polygon."""
    if alpha is None or beta is None:
        cp = fixed_points(lam, deg)
        alpha, beta = cp.p_plus, cp.p_minus
    t = (np.arange(resolution) + 0.5) / resolution
    rows = []
    for gi in t * alpha:
        for di in t * beta:
            if not M.in_con3(alpha, beta, gi, di):
                continue
            f = float(M.f_value(gi, di, alpha, beta, lam, deg))
            det = float(M.hessian(gi, di, alpha, beta, deg).det)
            rows.append({"gamma": float(gi), "delta": float(di), "f": f, "det": det,
                         "region": M.region_classify(gi, di, alpha, beta).value})
    return rows


def phase_scan(deg: int, lams, slack: float = 0.01, n_starts: int = 60, seed: int = 0):
    """One row per activity: tree densities, q+q-, the phi1 gap and a reduced-budget condition verdict."""
    rows = []
    for lam in lams:
        row = {"lambda": float(lam)}
        try:
            cp = fixed_points(lam, deg)
            row.update(p_minus=cp.p_minus, p_star=cp.p_star, p_plus=cp.p_plus, gap=cp.p_plus - cp.p_minus)
            if above_critical(lam, deg) and not cp.coincident:
                row["q_plus_q_minus"] = cp.q_plus * cp.q_minus
                row["contraction"] = contraction_factor(lam, deg)
                try:
                    row["tau"] = phi1_gap(lam, deg, slack).tau
                except ValueError as exc:
                    row["tau"] = None
                    row["error"] = str(exc)
                res = verify_condition(lam, deg, n_starts=n_starts, seed=seed)
                row["verdict"] = res.verdict.value
                row["needs_full_run"] = res.verdict != Verdict.VERIFIED or n_starts < 200
            else:
                row.update(q_plus_q_minus=cp.q_plus * cp.q_minus, contraction=None, tau=None, verdict=None)
        except Exception as exc:  # per-row degradation
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows
