"""Tree recursions for the hard-core model on the Delta-regular tree.

Notation: ``q`` is the root occupation probability of a tree whose every
vertex has ``Delta - 1`` children; ``p`` is the same for the complete tree
whose root has ``Delta`` children.  Above the critical activity the two-level
map has a 2-cycle ``(q_plus, q_minus)``, which induces ``(p_plus, p_minus)``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal

import numpy as np
from scipy.optimize import brentq

COINCIDE_TOL = 1e-9


def _check_degree(delta: int) -> None:
    if int(delta) != delta or delta < 3:
        raise ValueError(f"degree must be an integer >= 3, got {delta}")


def lambda_c(delta: int) -> Fraction:
    """Uniqueness threshold (Delta-1)^(Delta-1) / (Delta-2)^Delta as an exact rational."""
    _check_degree(delta)
    d = int(delta)
    return Fraction((d - 1) ** (d - 1), (d - 2) ** d)


def above_critical(lam, delta: int) -> bool:
    """Exact comparison lam > lambda_c(delta) (floats are compared through their exact value)."""
    x = Fraction(lam) if isinstance(lam, Rational) else Fraction(float(lam))
    return x > lambda_c(delta)


def phi(x, lam: float, delta: int):
    """phi(x) = (1-x)(1 - (x / (lam(1-x)))^(1/Delta)); its 2-cycles are the unbalanced densities."""
    x = np.asarray(x, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise ValueError("phi is defined for 0 < x < 1")
    out = (1 - x) * (1 - (x / (lam * (1 - x))) ** (1.0 / delta))
    return out.item() if out.ndim == 0 else out


def tree_map(q, lam: float, delta: int):
    """One level of the (Delta-1)-ary recursion: g(q) = lam(1-q)^(Delta-1) / (1 + lam(1-q)^(Delta-1))."""
    t = lam * (1 - np.asarray(q, dtype=float)) ** (delta - 1)
    out = t / (1 + t)
    return out.item() if np.ndim(out) == 0 else out


def _root_from_children(q: float, lam: float, delta: int) -> float:
    t = lam * (1 - q) ** delta
    return t / (1 + t)


def _symmetric_q(lam: float, delta: int) -> float:
    return brentq(lambda q: tree_map(q, lam, delta) - q, 0.0, 1.0, xtol=1e-17, rtol=8.9e-16, maxiter=500)


def _largest_two_cycle(q_star: float, lam: float, delta: int) -> float:
    """Largest fixed point of g∘g, by bisection of g(g(m)) - m on [q*, 1].

    Above criticality g∘g - id is positive just above q* and negative at 1, so
    the bisection converges to the unique fixed point of g∘g above q*.
    """
    lo, hi = q_star, 1.0
    for _ in range(2000):
        m = 0.5 * (lo + hi)
        if m in (lo, hi):
            break
        if tree_map(tree_map(m, lam, delta), lam, delta) - m > 0:
            lo = m
        else:
            hi = m
    return lo


@dataclass(frozen=True)
class CriticalPoints:
    delta: int
    lam: float
    lambda_c: float
    p_minus: float
    p_star: float
    p_plus: float
    q_minus: float
    q_plus: float
    coincident: bool

    def to_dict(self) -> dict:
        return asdict(self)


def fixed_points(lam, delta: int) -> CriticalPoints:
    """Symmetric and alternating fixed points of the tree recursion.

    At or below lambda_c the recursion is in uniqueness and all densities are
    returned equal to the symmetric fixed point.
    """
    _check_degree(delta)
    if not lam > 0:
        raise ValueError("activity must be positive")
    lamf = float(lam)
    q_star = _symmetric_q(lamf, delta)
    p_star = _root_from_children(q_star, lamf, delta)
    if not above_critical(lam, delta):
        q_plus = q_minus = q_star
    else:
        q_plus = _largest_two_cycle(q_star, lamf, delta)
        q_minus = tree_map(q_plus, lamf, delta)
    p_plus = _root_from_children(q_minus, lamf, delta)
    p_minus = _root_from_children(q_plus, lamf, delta)
    return CriticalPoints(
        delta=int(delta),
        lam=lamf,
        lambda_c=float(lambda_c(delta)),
        p_minus=p_minus,
        p_star=p_star,
        p_plus=p_plus,
        q_minus=q_minus,
        q_plus=q_plus,
        coincident=p_plus - p_minus < COINCIDE_TOL,
    )


def _half_equation(lam: float, delta: int) -> float:
    t = lam ** (-1.0 / delta)
    return (1 + t) ** (1 - 1 / delta) * (1 - t) ** (1 / delta) - 1


def lambda_half(delta: int, step: float = 0.01, xtol: float = 1e-12) -> float:
    """Smallest activity solving (1+t)^(1-1/Delta) (1-t)^(1/Delta) = 1 with t = lam^(-1/Delta).

    Scans upward from max(lambda_c, 1) (the left side needs t <= 1) until the
    sign changes, then refines with Brent's method.
    """
    _check_degree(delta)
    lo = max(float(lambda_c(delta)), 1.0) + 1e-12
    f_lo = _half_equation(lo, delta)
    for _ in range(1_000_000):
        hi = lo + step
        f_hi = _half_equation(hi, delta)
        if np.sign(f_hi) != np.sign(f_lo):
            return brentq(_half_equation, lo, hi, args=(delta,), xtol=xtol)
        lo, f_lo = hi, f_hi
    raise RuntimeError("no sign change found")


def lambda_half_from_marginal(delta: int) -> float:
    """Cross-check: the activity at which p_plus crosses 1/2."""
    lc = float(lambda_c(delta))
    return brentq(lambda x: fixed_points(x, delta).p_plus - 0.5, lc * (1 + 1e-9), 1e6, xtol=1e-12)


ArityMode = Literal["complete", "reduced"]


def finite_tree_marginal(levels: int, lam: float, delta: int, mode: ArityMode = "complete") -> float:
    """Root occupation probability on a finite tree with ``levels`` levels (1 = the root alone).

    ``mode="complete"``: the root has Delta children, all other internal
    vertices Delta-1.  ``mode="reduced"``: every internal vertex has Delta-1
    children.  Computed bottom-up on the ratio R = P(occupied)/P(vacant).
    """
    _check_degree(delta)
    if not 1 <= levels <= 10**6:
        raise ValueError("levels must be in 1..10^6")
    if mode not in ("complete", "reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    lam = float(lam)
    r = lam
    inner = levels - 1 if mode == "reduced" else levels - 2
    for _ in range(max(inner, 0)):
        r = lam / (1 + r) ** (delta - 1)
    if mode == "complete" and levels >= 2:
        r = lam / (1 + r) ** delta
    return r / (1 + r)


def contraction_factor(lam, delta: int) -> float:
    """Two-level derivative at the 2-cycle, per grandchild: (g∘g)'(q_plus) / (Delta-1)^2 = q_plus * q_minus."""
    if not above_critical(lam, delta):
        raise ValueError("contraction factor needs lam > lambda_c")
    cp = fixed_points(lam, delta)
    lam = float(lam)
    u = 1 + lam * (1 - cp.q_plus) ** (delta - 1)
    num = lam**2 * (1 - cp.q_plus) ** (delta - 2) * u ** (delta - 2)
    den = (lam + u ** (delta - 1)) ** 2
    return num / den
