"""First- and second-moment exponents of the hard-core model on random bipartite regular graphs.

Variables: ``alpha``, ``beta`` are the occupied fractions of each side;
``gamma``, ``delta`` the fractions shared by two configurations; ``epsilon``
the overlap variable eliminated in closed form.  ``deg`` is the degree Delta.
All functions broadcast over numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class DomainError(ValueError):
    """Point outside the open domain of a formula."""


def _arr(*xs):
    return [np.asarray(x, dtype=float) for x in xs]


def _out(x):
    return x.item() if np.ndim(x) == 0 else x


def entropy(x):
    """H(x) = -x ln x - (1-x) ln(1-x) on 0 < x < 1."""
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise DomainError("entropy argument outside (0, 1)")
    return _out(-x * np.log(x) - (1 - x) * np.log1p(-x))


def entropy2(x, y):
    """H1(x, y) = y H(x/y) = -x ln(x/y) - (y-x) ln((y-x)/y) on 0 < x < y."""
    x, y = _arr(x, y)
    if np.any((x <= 0) | (x >= y)):
        raise DomainError("need 0 < x < y")
    r = x / y
    return _out(-x * np.log(r) - (y - x) * np.log1p(-r))


# ---------------------------------------------------------------- first moment


def _check_simplex(alpha, beta):
    if np.any((alpha <= 0) | (beta <= 0) | (alpha + beta >= 1)):
        raise DomainError("need alpha, beta > 0 and alpha + beta < 1")


def phi1(alpha, beta, lam, deg):
    """Exponential growth rate of the first moment of Z^{alpha,beta}."""
    alpha, beta = _arr(alpha, beta)
    _check_simplex(alpha, beta)
    val = (
        (alpha + beta) * np.log(lam)
        + entropy(alpha)
        + entropy(beta)
        + deg * (1 - beta) * entropy(alpha / (1 - beta))
        - deg * entropy(alpha)
    )
    return _out(val)


def phi1_gradient(alpha, beta, lam, deg):
    alpha, beta = _arr(alpha, beta)
    _check_simplex(alpha, beta)
    s = 1 - alpha - beta
    da = np.log(lam) + (1 - deg) * np.log((1 - alpha) / alpha) + deg * np.log(s / alpha)
    db = np.log(lam) + np.log((1 - beta) / beta) + deg * np.log(s / (1 - beta))
    return _out(da), _out(db)


def phi1_hessian(alpha, beta, deg):
    """Second derivatives (d_aa, d_bb, d_ab) of phi1; independent of lam."""
    alpha, beta = _arr(alpha, beta)
    _check_simplex(alpha, beta)
    s = 1 - alpha - beta
    daa = (deg - 1) / (alpha * (1 - alpha)) - deg / s - deg / alpha
    dbb = -1 / (beta * (1 - beta)) - deg / s + deg / (1 - beta)
    dab = -deg / s
    return _out(daa), _out(dbb), _out(dab)


# --------------------------------------------------------------- second moment


@dataclass(frozen=True)
class OverlapPoint:
    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float

    def residuals(self) -> dict[str, float]:
        return overlap_residuals(self.alpha, self.beta, self.gamma, self.delta, self.epsilon)

    def swapped(self) -> OverlapPoint:
        """Image under exchanging the two sides (alpha, gamma, epsilon) <-> (beta, delta, eta)."""
        a, b, g, d, e = self.alpha, self.beta, self.gamma, self.delta, self.epsilon
        eta = b - d - (a - g - e)
        return OverlapPoint(b, a, d, g, eta)


def overlap_residuals(alpha, beta, gamma, delta, epsilon) -> dict[str, float]:
    """Slacks of the constraints defining the domain of phi2 (all must be > 0 in the interior)."""
    a, b, g, d, e = alpha, beta, gamma, delta, epsilon
    return {
        "gamma": g,
        "delta": d,
        "epsilon": e,
        "alpha-gamma-epsilon": a - g - e,
        "beta-delta": b - d,
        "1-2beta+delta-gamma-epsilon": 1 - 2 * b + d - g - e,
        "1-alpha-beta-epsilon": 1 - a - b - e,
        "beta-delta+epsilon+gamma-alpha": b - d + e + g - a,
    }


def _check_overlap(alpha, beta, gamma, delta, epsilon):
    _check_simplex(alpha, beta)
    for name, r in overlap_residuals(alpha, beta, gamma, delta, epsilon).items():
        if np.any(np.asarray(r) <= 0):
            raise DomainError(f"constraint {name} > 0 violated")


def phi2(alpha, beta, gamma, delta, epsilon, lam, deg):
    """Exponential growth rate of the second moment, for a fixed overlap profile."""
    a, b, g, d, e = _arr(alpha, beta, gamma, delta, epsilon)
    _check_overlap(a, b, g, d, e)
    H, H1 = entropy, entropy2
    edge = (
        H1(g, 1 - 2 * b + d)
        - H(g)
        + H1(e, 1 - 2 * b + d - g)
        + H1(a - g - e, b - d)
        - H1(a - g, 1 - g)
        + H1(a - g, 1 - b - g - e)
        - H1(a - g, 1 - a)
    )
    val = (
        2 * (a + b) * np.log(lam)
        + H(a)
        + H1(g, a)
        + H1(a - g, 1 - a)
        + H(b)
        + H1(d, b)
        + H1(b - d, 1 - b)
        + deg * edge
    )
    return _out(val)


def phi2_point(p: OverlapPoint, lam, deg):
    return phi2(p.alpha, p.beta, p.gamma, p.delta, p.epsilon, lam, deg)


def phi2_gradient(alpha, beta, gamma, delta, epsilon, deg):
    """(d/dgamma, d/ddelta, d/depsilon) of phi2 as logs of closed-form ratios."""
    a, b, g, d, e = _arr(alpha, beta, gamma, delta, epsilon)
    _check_overlap(a, b, g, d, e)
    s1 = 1 - 2 * b + d - g - e
    s2 = a - g - e
    s3 = 1 - b - g - e
    s4 = b - a + g - d + e
    dg = (
        deg * np.log(s1) + deg * np.log(s2) + (deg - 1) * np.log(1 - 2 * a + g)
        - deg * np.log(s3) - deg * np.log(s4) - (deg - 2) * np.log(a - g) - np.log(g)
    )
    dd = deg * np.log(s4) + (deg - 1) * np.log(1 - 2 * b + d) - deg * np.log(s1) - (deg - 2) * np.log(b - d) - np.log(d)
    de = deg * (np.log(s1) + np.log(s2) + np.log(1 - a - b - e) - np.log(e) - np.log(s4) - np.log(s3))
    return _out(dg), _out(dd), _out(de)


# -------------------------------------------------------- epsilon elimination


def con3_residuals(alpha, beta, gamma, delta) -> dict[str, float]:
    a, b, g, d = alpha, beta, gamma, delta
    return {
        "gamma": g,
        "alpha-gamma": a - g,
        "delta": d,
        "beta-delta": b - d,
        "1-2beta+delta-gamma": 1 - 2 * b + d - g,
        "1-2alpha+gamma-delta": 1 - 2 * a + g - d,
    }


def in_con3(alpha, beta, gamma, delta, margin: float = 0.0):
    """Boolean mask of strict interior membership (each slack > margin)."""
    ok = True
    for r in con3_residuals(alpha, beta, gamma, delta).values():
        ok = ok & (np.asarray(r) > margin)
    return ok


def _check_con3(a, b, g, d):
    _check_simplex(a, b)
    for name, r in con3_residuals(a, b, g, d).items():
        if np.any(np.asarray(r) <= 0):
            raise DomainError(f"constraint {name} > 0 violated")


@dataclass(frozen=True)
class EliminationResult:
    eps_hat: float
    eta_hat: float
    D: float
    sqrt_D: float
    # alpha - gamma - eps_hat (= beta - delta - eta_hat), formed without cancellation
    common: float
    # 1 - alpha - beta - eps_hat - eta_hat, formed without cancellation
    rest: float


def eliminate_epsilon(alpha, beta, gamma, delta) -> EliminationResult:
    """Maximising epsilon of phi2 for fixed (alpha, beta, gamma, delta), and its mirror eta.

    eps_hat = (L - sqrt(D))/2 with L = 1 + alpha - beta - 2 gamma is evaluated as
    2(alpha-gamma)(1-2beta-gamma+delta)/(L + sqrt(D)) to avoid cancellation.
    """
    a, b, g, d = _arr(alpha, beta, gamma, delta)
    _check_con3(a, b, g, d)
    s = 1 - a - b
    D = s * s + 4 * (a - g) * (b - d)
    r = np.sqrt(D)
    eps = 2 * (a - g) * (1 - 2 * b - g + d) / ((1 + a - b - 2 * g) + r)
    eta = 2 * (b - d) * (1 - 2 * a - d + g) / ((1 - a + b - 2 * d) + r)
    common = 2 * (a - g) * (b - d) / (s + r)
    rest = eps * eta / common
    return EliminationResult(*(_out(x) for x in (eps, eta, D, r, common, rest)))


def f_value(gamma, delta, alpha, beta, lam, deg):
    """Reduced second-moment exponent f(gamma, delta) = phi2 at eps_hat."""
    el = eliminate_epsilon(alpha, beta, gamma, delta)
    return phi2(alpha, beta, gamma, delta, el.eps_hat, lam, deg)


@dataclass(frozen=True)
class FGradient:
    d_gamma: float
    d_delta: float
    W11: float
    W12: float
    W21: float
    W22: float


def w_values(gamma, delta, alpha, beta):
    a, b, g, d = _arr(alpha, beta, gamma, delta)
    el = eliminate_epsilon(a, b, g, d)
    e, h = np.asarray(el.eps_hat), np.asarray(el.eta_hat)
    w11 = e * (1 - 2 * a + g) / ((el.rest + h) * (a - g))
    w12 = (a - g) ** 2 / ((1 - 2 * a + g) * g)
    w21 = h * (1 - 2 * b + d) / ((el.rest + e) * (b - d))
    w22 = (b - d) ** 2 / ((1 - 2 * b + d) * d)
    return w11, w12, w21, w22


def w11_alternative(gamma, delta, alpha, beta):
    """W11 through its other closed form, (alpha-gamma-eps) eps (1-2alpha+gamma) / (eta (alpha-gamma)^2)."""
    a, b, g, d = _arr(alpha, beta, gamma, delta)
    el = eliminate_epsilon(a, b, g, d)
    return _out(el.common * el.eps_hat * (1 - 2 * a + g) / (el.eta_hat * (a - g) ** 2))


def f_gradient(gamma, delta, alpha, beta, deg) -> FGradient:
    w11, w12, w21, w22 = w_values(gamma, delta, alpha, beta)
    dg = deg * np.log(w11) + np.log(w12)
    dd = deg * np.log(w21) + np.log(w22)
    return FGradient(*(_out(x) for x in (dg, dd, w11, w12, w21, w22)))


# ----------------------------------------------------------------- Hessian


@dataclass(frozen=True)
class HessianReport:
    d2_gamma: float
    d2_delta: float
    d_cross: float
    det: float
    r: tuple  # R1..R11
    u1: float
    u2: float

    @property
    def det_direct(self):
        return self.d2_gamma * self.d2_delta - self.d_cross**2


def r_values(gamma, delta, alpha, beta):
    """The eleven auxiliary ratios R1..R11 entering the Hessian of f."""
    a, b, g, d = _arr(alpha, beta, gamma, delta)
    el = eliminate_epsilon(a, b, g, d)
    r, c = np.asarray(el.sqrt_D), np.asarray(el.common)
    s = 1 - a - b
    t = c + s  # 1 - beta - gamma - eps_hat
    R = (
        s / el.rest,
        r / (1 - 2 * a + g),
        2 * c / (a - g),
        r / g,
        2 * t / (a - g),
        r / (1 - 2 * b + d),
        2 * c / (b - d),
        r / d,
        2 * t / (b - d),
        t / c,
        (1 - a) * (1 - b) / (a * b),
    )
    return tuple(np.asarray(x) for x in R), r


def det_from_r(R, sqrt_D, deg):
    """Determinant of the Hessian of f, grouped by powers of (Delta - 1)."""
    R1, R2, R3, R4, R5, R6, R7, R8, R9 = R[:9]
    A = -R1 + R2 + R3
    B = -R1 + R6 + R7
    C = -R1 - R8 - R9
    E = -R1 - R4 - R5
    k = deg - 1
    inner = k * k * (A * B - R1**2) + k * (A * C + B * E - 2 * R1**2) + (C * E - R1**2)
    return inner / sqrt_D**2


def det_factored_deg3(R, sqrt_D):
    """For Delta = 3: det = (3 R1 (U1+U2) + U1 U2) / D."""
    R1, R2, R3, R4, R5, R6, R7, R8, R9 = R[:9]
    u1 = R8 + R9 - 2 * R6 - 2 * R7
    u2 = R4 + R5 - 2 * R2 - 2 * R3
    return (3 * R1 * (u1 + u2) + u1 * u2) / sqrt_D**2


def hessian(gamma, delta, alpha, beta, deg) -> HessianReport:
    R, r = r_values(gamma, delta, alpha, beta)
    R1, R2, R3, R4, R5, R6, R7, R8, R9 = R[:9]
    d2g = ((-R1 + R2 + R3) * deg - R2 - R3 - R4 - R5) / r
    d2d = ((-R1 + R6 + R7) * deg - R6 - R7 - R8 - R9) / r
    dx = deg * R1 / r
    det = det_from_r(R, r, deg)
    u1 = R8 + R9 - 2 * R6 - 2 * R7
    u2 = R4 + R5 - 2 * R2 - 2 * R3
    return HessianReport(
        _out(d2g), _out(d2d), _out(dx), _out(det), tuple(_out(x) for x in R), _out(u1), _out(u2)
    )


# ------------------------------------------------------------------ regions


class RegionClass(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"
    NEITHER = "neither"


def lemma_forms(gamma, delta, alpha, beta):
    """The two quantities whose signs decide W11 >= 1 and W21 >= 1."""
    a, b, g, d = alpha, beta, gamma, delta
    # (1-a)^2 d + b^2 (2a-1-g) regrouped so that it is exactly 0 at (a^2, b^2) in floating point
    l1 = (1 - a) ** 2 * (d - b * b) + b * b * (a * a - g)
    l2 = (1 - b) ** 2 * (g - a * a) + a * a * (b * b - d)
    return l1, l2


def in_lower(gamma, delta, alpha, beta):
    l1, l2 = lemma_forms(gamma, delta, alpha, beta)
    return (gamma > 0) & (gamma <= alpha * alpha) & (delta > 0) & (delta <= beta * beta) & (l1 <= 0) & (l2 <= 0)


def in_upper(gamma, delta, alpha, beta):
    l1, l2 = lemma_forms(gamma, delta, alpha, beta)
    return (gamma >= alpha * alpha) & (gamma < alpha) & (delta >= beta * beta) & (delta < beta) & (l1 >= 0) & (l2 >= 0)


def region_classify(gamma, delta, alpha, beta) -> RegionClass:
    lo = bool(in_lower(gamma, delta, alpha, beta))
    up = bool(in_upper(gamma, delta, alpha, beta))
    if lo and up:
        return RegionClass.BOTH
    if lo:
        return RegionClass.LOWER
    if up:
        return RegionClass.UPPER
    return RegionClass.NEITHER


def independent_overlap(alpha, beta) -> OverlapPoint:
    """Overlap profile of two independent configurations: (alpha^2, beta^2, alpha(1-alpha-beta))."""
    return OverlapPoint(alpha, beta, alpha**2, beta**2, alpha * (1 - alpha - beta))
