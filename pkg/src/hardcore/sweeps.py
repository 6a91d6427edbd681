"""Random sampling of (alpha, beta, gamma, delta) regions and the Hessian sign suite over them."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import moments as M

RegionName = str  # "lower" | "upper"
PairSet = str  # "R_delta" | "R_delta_half" | "R3_prime"

R3_PRIME_BETA_MAX = (3 - np.sqrt(5)) / 4


def in_r_delta(alpha, beta, deg):
    return (alpha > 0) & (beta > 0) & (alpha + beta + deg * (deg - 2) * alpha * beta <= 1)


def r3_prime_beta(alpha):
    """The beta with (1-alpha-beta)^2 = alpha*beta on the branch 0 < beta <= (3-sqrt5)/4."""
    alpha = np.asarray(alpha, dtype=float)
    b = 2 - alpha
    # smaller root of beta^2 - (2-alpha) beta + (1-alpha)^2 = 0, written without cancellation
    return 2 * (1 - alpha) ** 2 / (b + np.sqrt(b * b - 4 * (1 - alpha) ** 2))


def sample_pairs(n: int, pairs: PairSet, deg: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` points (alpha, beta) from R_Delta, R_Delta with alpha, beta <= 1/2, or the curve R'_3."""
    if pairs == "R3_prime":
        a = rng.uniform(0.5, 1.0, size=n)
        a = np.where(a <= 0.5, np.nextafter(0.5, 1.0), a)
        return np.column_stack([a, r3_prime_beta(a)])
    if pairs not in ("R_delta", "R_delta_half"):
        raise ValueError(f"unknown pair set {pairs!r}")
    top = 0.5 if pairs == "R_delta_half" else 1.0
    out: list[np.ndarray] = []
    got = 0
    while got < n:
        x = rng.uniform(0, top, size=(4 * n, 2))
        keep = in_r_delta(x[:, 0], x[:, 1], deg) & (x.min(axis=1) > 0)
        out.append(x[keep])
        got += int(keep.sum())
    return np.vstack(out)[:n]


def _region_mask(region: RegionName, g, d, a, b):
    inside = M.in_con3(a, b, g, d)
    if region == "lower":
        return inside & M.in_lower(g, d, a, b)
    if region == "upper":
        return inside & M.in_upper(g, d, a, b)
    raise ValueError(f"unknown region {region!r}")


def sample_overlaps(
    n: int, region: RegionName, pairs: PairSet, deg: int, seed: int = 0, max_rounds: int = 200
) -> np.ndarray:
    """Rows (alpha, beta, gamma, delta) with (gamma, delta) in the interior of con3 and in ``region``.

    For each candidate pair, (gamma, delta) is drawn uniformly from the
    bounding box of the region and rejected if it falls outside.
    """
    rng = np.random.default_rng(seed)
    out: list[np.ndarray] = []
    got = 0
    for _ in range(max_rounds):
        m = max(4 * (n - got), 256)
        ab = sample_pairs(m, pairs, deg, rng)
        a, b = ab[:, 0], ab[:, 1]
        if region == "lower":
            g = rng.uniform(0, 1, m) * a * a
            d = rng.uniform(0, 1, m) * b * b
        else:
            g = a * a + rng.uniform(0, 1, m) * (a - a * a)
            d = b * b + rng.uniform(0, 1, m) * (b - b * b)
        keep = _region_mask(region, g, d, a, b) & (g > 0) & (d > 0)
        out.append(np.column_stack([a, b, g, d])[keep])
        got += int(keep.sum())
        if got >= n:
            return np.vstack(out)[:n]
    raise RuntimeError(f"only {got} of {n} points found in {region}/{pairs}")


@dataclass(frozen=True)
class SignSuiteResult:
    region: str
    pairs: str
    deg: int
    n_points: int
    cross_nonpositive: int
    diagonal_nonnegative: int
    r1_vs_r2_r3: int
    r1_vs_r6_r7: int
    r_nonpositive: int
    det_nonpositive: int
    min_det: float

    @property
    def violations(self) -> int:
        return (
            self.cross_nonpositive + self.diagonal_nonnegative + self.r1_vs_r2_r3
            + self.r1_vs_r6_r7 + self.r_nonpositive + self.det_nonpositive
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = self.violations
        return d


def hessian_sign_suite(region: RegionName, pairs: PairSet, deg: int, n: int = 10_000, seed: int = 0) -> SignSuiteResult:
    """Count sign violations of the Hessian entries, the R-inequalities and det over random valid points."""
    P = sample_overlaps(n, region, pairs, deg, seed)
    a, b, g, d = P.T
    H = M.hessian(g, d, a, b, deg)
    R = [np.asarray(x) for x in H.r]
    return SignSuiteResult(
        region=region,
        pairs=pairs,
        deg=deg,
        n_points=len(P),
        cross_nonpositive=int(np.sum(H.d_cross <= 0)),
        diagonal_nonnegative=int(np.sum((H.d2_gamma >= 0) | (H.d2_delta >= 0))),
        r1_vs_r2_r3=int(np.sum(R[0] <= R[1] + R[2])),
        r1_vs_r6_r7=int(np.sum(R[0] <= R[5] + R[6])),
        r_nonpositive=int(np.sum(np.any(np.stack(R[:9]) <= 0, axis=0))),
        det_nonpositive=int(np.sum(H.det <= 0)),
        min_det=float(np.min(H.det)),
    )


SUITE_CONFIGS: tuple[tuple[str, str, int], ...] = (
    *(("lower", "R_delta", k) for k in (3, 4, 5, 6)),
    *(("upper", "R_delta_half", k) for k in (3, 4, 5, 6)),
    ("upper", "R3_prime", 3),
)
