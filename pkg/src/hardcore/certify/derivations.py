"""Independent derivations of the transcribed polynomials, exact identity checks, and a numeric oracle.

``derive_all`` rebuilds every polynomial from its defining expression in the
W and R quantities using exact arithmetic in Q(alpha, beta, gamma, delta)[sqrt D].
``oracle_values`` evaluates the same defining expressions in floating point
through ``hardcore.moments`` (which eliminates epsilon by a different,
cancellation-free formula), so a transcription error shows up twice.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .. import moments
from .poly import D_POLY, PolynomialExpr, RadicalFraction, radical_split, radical_symbols
from .transcribed import TRANSCRIBED

HALF = Fraction(1, 2)


def _parse(name: str) -> PolynomialExpr:
    return PolynomialExpr.parse(TRANSCRIBED[name])


@lru_cache(maxsize=None)
def transcribed(name: str) -> PolynomialExpr:
    if name == "TP1":
        return transcribed("P71") ** 2 - transcribed("P72") ** 2 * D_POLY
    return _parse(name)


@lru_cache(maxsize=None)
def _symbols():
    s = radical_symbols()
    a, b, g, d, sq = (s[k] for k in ("alpha", "beta", "gamma", "delta", "sqrt_D"))
    eps = (1 + a - b - 2 * g - sq) * HALF
    eta = (1 + b - a - 2 * d - sq) * HALF
    r = {
        "R1": (1 - a - b) / (1 - a - b - eps - eta),
        "R2": sq / (1 - 2 * a + g),
        "R3": 2 * (a - g - eps) / (a - g),
        "R4": sq / g,
        "R6": sq / (1 - 2 * b + d),
        "R8": sq / d,
        "R9": 2 * (1 - b - g - eps) / (b - d),
        "R10": (1 - b - g - eps) / (a - g - eps),
        "R11": (1 - a) * (1 - b) / (a * b),
    }
    return a, b, g, d, sq, eps, eta, r


def _w3():
    a, b, g, d, sq, eps, eta, _ = _symbols()
    return ((a - g - eps) * eps * (1 - 2 * a + g)) - eta * (a - g) ** 2


def _w4():
    a, b, g, d, sq, eps, eta, _ = _symbols()
    return ((b - d - eta) * eta * (1 - 2 * b + d)) - eps * (b - d) ** 2


def _p1():
    a, b, g, d, sq, eps, eta, r = _symbols()
    return (-r["R1"] + r["R2"] + r["R3"]) * eps * eta * (1 - 2 * a + g) * (a - g) * (a - g - eps)


def _p5():
    a, b, g, d, sq, eps, eta, r = _symbols()
    hes = (-r["R1"] + r["R2"] + r["R3"]) * (-r["R1"] - r["R8"] - r["R9"]) - r["R1"] * r["R1"]
    return hes * d * (a - g) * eps * eta * (1 - 2 * a + g) * (a - g - eps) / sq


def _p7():
    a, b, g, d, sq, eps, eta, r = _symbols()
    inner = r["R11"] * r["R2"] / sq - (r["R3"] * HALF) / eta * (r["R11"] - r["R10"])
    return inner * a * b * eta * (a - g) * (1 - 2 * a + g)


def _s1():
    a, b, g, d, sq, eps, eta, r = _symbols()
    e = (-r["R2"] * r["R11"] - r["R6"] * r["R11"] + r["R4"] + r["R8"]) / sq
    return e * a * b * g * d * (1 - 2 * a + g) * (1 - 2 * b + d)


@lru_cache(maxsize=None)
def derive_all() -> dict[str, PolynomialExpr]:
    """Every named polynomial, derived from its defining expression."""
    out: dict[str, PolynomialExpr] = {}
    out["W31"], out["W32"] = radical_split(_w3())
    out["W41"], out["W42"] = radical_split(_w4())
    out["P11"], out["P12"] = radical_split(_p1())
    out["P51"], out["P52"] = radical_split(_p5())
    out["P71"], out["P72"] = radical_split(_p7())
    s1, zero = radical_split(_s1())
    if not zero.is_zero:
        raise AssertionError("s1 expression is not free of sqrt(D)")
    out["s1"] = s1
    # P21 is defined by P11^2 - D P12^2 = -(beta-delta)^2 (alpha-gamma)^3 P21
    a, b, g, d = (PolynomialExpr.variable(v) for v in ("alpha", "beta", "gamma", "delta"))
    num = -(out["P11"] ** 2 - D_POLY * out["P12"] ** 2)
    q, rem = num.to_ring().div([((b - d) ** 2 * (a - g) ** 3).to_ring()])
    if rem:
        raise AssertionError("P11^2 - D P12^2 is not divisible by (beta-delta)^2 (alpha-gamma)^3")
    out["P21"] = PolynomialExpr.from_ring(q[0])
    out["qwer"] = D_POLY - (-((1 - a - b) ** 2) - a - b + g + d) ** 2
    out["TP1"] = out["P71"] ** 2 - out["P72"] ** 2 * D_POLY
    return out


def transcription_mismatches() -> list[str]:
    """Names whose transcribed and derived polynomials differ (empty when all agree)."""
    derived = derive_all()
    return [k for k in TRANSCRIBED if transcribed(k) != derived[k]]


# ------------------------------------------------------------ identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    lhs_terms: int


def _vars():
    return tuple(PolynomialExpr.variable(v) for v in ("alpha", "beta", "gamma", "delta"))


def exact_identities() -> list[IdentityCheck]:
    """Printed factored forms, compared coefficient by coefficient after clearing denominators.

    * ``(W31/W32)^2 - D = -4(beta-delta)(alpha-gamma)^2 L1 / den_W^2``
    * ``(W41/W42)^2 - D = -4(beta-delta)^2(alpha-gamma) L2 / den_W'^2``
    * ``P11^2 - D P12^2 = -(beta-delta)^2 (alpha-gamma)^3 P21``
    * ``D P52^2 - P51^2 = 4(beta-delta)(alpha-gamma)^3 L1^2``

    with ``L1 = (1-alpha)^2 delta + beta^2(2alpha-1-gamma)``,
    ``L2 = (1-beta)^2 gamma + alpha^2(2beta-1-delta)``.
    """
    a, b, g, d = _vars()
    t = transcribed
    l1 = (1 - a) ** 2 * d + b**2 * (2 * a - 1 - g)
    l2 = (1 - b) ** 2 * g + a**2 * (2 * b - 1 - d)
    den5 = 2 * a * b - b * g - 2 * a - b + a**2 + 1
    den6 = b**2 - d * a + 1 - 2 * b - a + 2 * a * b
    checks = []
    lhs = (t("W31") ** 2 - D_POLY * t("W32") ** 2) * den5**2
    rhs = -4 * (b - d) * (a - g) ** 2 * l1 * t("W32") ** 2
    checks.append(IdentityCheck("W5", lhs == rhs, len(lhs.terms)))
    lhs = (t("W41") ** 2 - D_POLY * t("W42") ** 2) * den6**2
    rhs = -4 * (b - d) ** 2 * (a - g) * l2 * t("W42") ** 2
    checks.append(IdentityCheck("W6", lhs == rhs, len(lhs.terms)))
    lhs = t("P11") ** 2 - D_POLY * t("P12") ** 2
    rhs = -((b - d) ** 2) * (a - g) ** 3 * t("P21")
    checks.append(IdentityCheck("P2", lhs == rhs, len(lhs.terms)))
    lhs = D_POLY * t("P52") ** 2 - t("P51") ** 2
    rhs = 4 * (b - d) * (a - g) ** 3 * l1**2
    checks.append(IdentityCheck("P5", lhs == rhs, len(lhs.terms)))
    return checks


# ------------------------------------------------------------ numeric oracle


def sample_region_points(n: int, seed: int = 0) -> np.ndarray:
    """Rejection-sample ``n`` points with (alpha, beta) in the open simplex and (gamma, delta) inside con3."""
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < n:
        x = rng.uniform(0.02, 0.98, size=(4 * n, 4))
        a, b, g, d = x.T
        g = g * a
        d = d * b
        ok = (a + b < 0.98) & moments.in_con3(a, b, g, d, margin=1e-3)
        pts.extend(np.stack([a, b, g, d], axis=1)[ok])
    return np.array(pts[:n])


def _pair_exact(p1: PolynomialExpr, p2: PolynomialExpr, x) -> float:
    """P1 + P2 sqrt(D) at a float point: exact polynomial values, 60-digit square root.

    Plain float evaluation loses up to five digits here to cancellation
    between the two parts.
    """
    pt = [Fraction(float(v)) for v in x]
    with localcontext() as ctx:
        ctx.prec = 60

        def dec(q: Fraction) -> Decimal:
            return Decimal(q.numerator) / Decimal(q.denominator)

        val = dec(p1.evaluate_exact(pt)) + dec(p2.evaluate_exact(pt)) * dec(D_POLY.evaluate_exact(pt)).sqrt()
    return float(val)


def oracle_values(name: str, pts: np.ndarray):
    """Reference value of ``name`` through the floating-point W/R quantities of ``moments``.

    Returns the pair (value, comparable) where ``comparable`` is P1 + P2 sqrt(D)
    for radical pairs, evaluated from the transcribed polynomials.
    """
    a, b, g, d = pts.T
    el = moments.eliminate_epsilon(a, b, g, d)
    e, h, sq = np.asarray(el.eps_hat), np.asarray(el.eta_hat), np.asarray(el.sqrt_D)
    R, _ = moments.r_values(g, d, a, b)
    R = [np.asarray(x) for x in R]
    w11, _, w21, _ = moments.w_values(g, d, a, b)

    def pair(n1, n2):
        return np.array([_pair_exact(transcribed(n1), transcribed(n2), x) for x in pts])

    if name == "W3":
        return (w11 - 1) * h * (a - g) ** 2, pair("W31", "W32")
    if name == "W4":
        return (w21 - 1) * e * (b - d) ** 2, pair("W41", "W42")
    p1 = (-R[0] + R[1] + R[2]) * e * h * (1 - 2 * a + g) * (a - g) * el.common
    if name == "P1":
        return p1, pair("P11", "P12")
    if name == "P21":
        # P11^2 - D P12^2 = (P11 + sqrt(D) P12)(P11 - sqrt(D) P12) = p1 (2 P11 - p1), free of cancellation
        p11 = np.array([float(transcribed("P11").evaluate_exact([Fraction(float(v)) for v in x])) for x in pts])
        ref = -p1 * (2 * p11 - p1) / ((b - d) ** 2 * (a - g) ** 3)
        return ref, transcribed("P21").evaluate(a, b, g, d)
    if name == "P5":
        hes = (-R[0] + R[1] + R[2]) * (-R[0] - R[7] - R[8]) - R[0] ** 2
        return hes * d * (a - g) * e * h * (1 - 2 * a + g) * el.common / sq, pair("P51", "P52")
    if name == "P7":
        inner = R[10] * R[1] / sq - R[2] / 2 / h * (R[10] - R[9])
        return inner * a * b * h * (a - g) * (1 - 2 * a + g), pair("P71", "P72")
    if name == "s1":
        val = (-R[1] * R[10] - R[5] * R[10] + R[3] + R[7]) / sq
        return val * a * b * g * d * (1 - 2 * a + g) * (1 - 2 * b + d), transcribed("s1").evaluate(a, b, g, d)
    if name == "qwer":
        ref = sq**2 - (-((1 - a - b) ** 2) - a - b + g + d) ** 2
        return ref, transcribed("qwer").evaluate(a, b, g, d)
    raise KeyError(name)


ORACLE_NAMES = ("W3", "W4", "P1", "P21", "P5", "P7", "s1", "qwer")


def oracle_relative_errors(n: int = 100, seed: int = 0) -> dict[str, float]:
    """Largest relative disagreement between transcription and oracle for each quantity."""
    pts = sample_region_points(n, seed)
    out = {}
    for name in ORACLE_NAMES:
        ref, val = oracle_values(name, pts)
        scale = np.maximum(np.abs(ref), np.abs(val))
        out[name] = float(np.max(np.abs(ref - val) / scale))
    return out
