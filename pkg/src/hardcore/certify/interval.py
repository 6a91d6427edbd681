"""Vectorised interval arithmetic with outward rounding, and two polynomial enclosures.

``IntervalArray`` rounds every endpoint outward with ``np.nextafter``, so the
result of each operation contains the exact real result for all real inputs
in the operand intervals.  ``natural_enclosure`` evaluates a polynomial term by
term with it.  ``CenteredForm`` expands the polynomial exactly around the
midpoint of each box and bounds the floating-point error of that evaluation a
priori; it is much tighter on small boxes.  ``enclose`` intersects the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .poly import PolynomialExpr

_U = 2.0**-53  # unit roundoff
_TINY = 1e-290  # absorbs any underflow in error bounds
_INF = np.inf


def _down(x):
    return np.nextafter(x, -_INF)


def _up(x):
    return np.nextafter(x, _INF)


def float_interval(c: Fraction) -> tuple[float, float]:
    """Tightest float interval containing the rational ``c``."""
    f = float(c)
    if Fraction(f) == c:
        return f, f
    return (f, float(_up(f))) if Fraction(f) < c else (float(_down(f)), f)


@dataclass(frozen=True)
class IntervalArray:
    lo: np.ndarray
    hi: np.ndarray

    @classmethod
    def point(cls, x) -> IntervalArray:
        x = np.asarray(x, dtype=float)
        return cls(x, x)

    @classmethod
    def constant(cls, c: Fraction, shape) -> IntervalArray:
        lo, hi = float_interval(Fraction(c))
        return cls(np.full(shape, lo), np.full(shape, hi))

    def __add__(self, o: IntervalArray) -> IntervalArray:
        return IntervalArray(_down(self.lo + o.lo), _up(self.hi + o.hi))

    def __sub__(self, o: IntervalArray) -> IntervalArray:
        return IntervalArray(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __neg__(self) -> IntervalArray:
        return IntervalArray(-self.hi, -self.lo)

    def __mul__(self, o: IntervalArray) -> IntervalArray:
        p = np.stack([self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi])
        return IntervalArray(_down(p.min(axis=0)), _up(p.max(axis=0)))

    def __pow__(self, k: int) -> IntervalArray:
        if k == 0:
            return IntervalArray(np.ones_like(self.lo), np.ones_like(self.hi))
        out = self
        for _ in range(k - 1):
            out = out * self
        if k % 2 == 0:
            # even powers of an interval straddling zero start at zero
            straddle = (self.lo < 0) & (self.hi > 0)
            lo = np.where(straddle, 0.0, np.maximum(out.lo, 0.0))
            return IntervalArray(lo, out.hi)
        return out

    def contains(self, x) -> np.ndarray:
        return (self.lo <= x) & (x <= self.hi)

    @property
    def width(self) -> np.ndarray:
        return self.hi - self.lo


def natural_enclosure(p: PolynomialExpr, lo: np.ndarray, hi: np.ndarray) -> IntervalArray:
    """Term-by-term interval evaluation over boxes ``lo[i] <= x <= hi[i]`` (arrays of shape (n, 4))."""
    shape = lo.shape[:1]
    xs = [IntervalArray(lo[:, i], hi[:, i]) for i in range(4)]
    total = IntervalArray(np.zeros(shape), np.zeros(shape))
    for c, e in p.terms:
        term = IntervalArray.constant(c, shape)
        for i, k in enumerate(e):
            if k:
                term = term * xs[i] ** k
        total = total + term
    return total


class CenteredForm:
    """Exact Taylor expansion about the box midpoint with an a-priori rounding-error bound.

    For a box with midpoint ``m`` and radius ``r`` (componentwise),
    ``p(m + h) = sum_k c_k(m) h^k`` exactly, where
    ``c_k(m) = sum_e a_e prod_i C(e_i, k_i) m_i^(e_i - k_i)``.  The ``c_k`` are
    computed in floating point as a matrix product; the error of that product
    is bounded by the standard ``n u / (1 - n u)`` estimate plus the error of
    the coefficient and monomial roundings.  Each ``h^k`` ranges over
    ``[0, r^k]`` when all exponents are even and ``[-r^k, r^k]`` otherwise.
    """

    def __init__(self, p: PolynomialExpr):
        self.poly = p
        terms = p.terms if p.terms else ((Fraction(0), (0, 0, 0, 0)),)
        shifts: dict[tuple, int] = {}
        powers: dict[tuple, int] = {}
        entries: dict[tuple[int, int], Fraction] = {}
        for a, e in terms:
            for k in np.ndindex(*(x + 1 for x in e)):
                f = tuple(x - y for x, y in zip(e, k))
                ki = shifts.setdefault(tuple(k), len(shifts))
                fi = powers.setdefault(f, len(powers))
                mult = comb(e[0], k[0]) * comb(e[1], k[1]) * comb(e[2], k[2]) * comb(e[3], k[3])
                entries[ki, fi] = entries.get((ki, fi), Fraction(0)) + a * mult
        self.shift_exp = np.array(list(shifts), dtype=np.int64).reshape(-1, 4)
        self.power_exp = np.array(list(powers), dtype=np.int64).reshape(-1, 4)
        mat = np.zeros((len(shifts), len(powers)))
        for (ki, fi), v in entries.items():
            mat[ki, fi] = float(v)
        self.matrix = mat
        self.abs_matrix = np.abs(mat)
        self.degree = int(self.power_exp.sum(axis=1).max())
        self.zero_index = shifts.get((0, 0, 0, 0))
        self.all_even = np.all(self.shift_exp % 2 == 0, axis=1)
        self.n_sum = len(powers)
        # a-priori relative error of one computed coefficient c_k:
        # rounding of the matrix entry (2u), monomials (degree + 1 products),
        # and accumulation over n_sum terms; 1.01 covers second-order terms.
        n = self.n_sum + self.degree + 4
        self.coef_rel = 1.01 * n * _U / (1 - n * _U)
        # radius monomials: at most degree multiplications
        self.rad_rel = 1.01 * (self.degree + 2) * _U
        self.final_rel = 1.01 * (len(shifts) + 3) * _U

    @staticmethod
    def _monomials(x: np.ndarray, exps: np.ndarray) -> np.ndarray:
        out = np.ones((x.shape[0], exps.shape[0]))
        for i in range(4):
            col = exps[:, i]
            if col.any():
                out *= x[:, i : i + 1] ** col[None, :]
        return out

    def taylor(self, mid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Computed Taylor coefficients (n, K) at ``mid`` and a bound on their error."""
        mono = self._monomials(mid, self.power_exp)
        coef = mono @ self.matrix.T
        err = (np.abs(mono) @ self.abs_matrix.T) * self.coef_rel + _TINY
        return coef, err

    def __call__(self, lo: np.ndarray, hi: np.ndarray) -> IntervalArray:
        mid = 0.5 * (lo + hi)
        mid = np.clip(mid, lo, hi)
        rad = _up(np.maximum(hi - mid, mid - lo))
        coef, err = self.taylor(mid)
        rk = self._monomials(rad, self.shift_exp) * (1 + self.rad_rel)
        cl = (coef - err) * rk
        ch = (coef + err) * rk
        mag = np.maximum(np.abs(cl), np.abs(ch))
        even = self.all_even[None, :]
        lo_terms = np.where(even, np.minimum(cl, 0.0), -mag)
        hi_terms = np.where(even, np.maximum(ch, 0.0), mag)
        if self.zero_index is not None:
            # the constant term is not multiplied by any h
            lo_terms[:, self.zero_index] = cl[:, self.zero_index]
            hi_terms[:, self.zero_index] = ch[:, self.zero_index]
        slo, shi = lo_terms.sum(axis=1), hi_terms.sum(axis=1)
        slack = (np.abs(lo_terms).sum(axis=1) + np.abs(hi_terms).sum(axis=1)) * self.final_rel + _TINY
        return IntervalArray(_down(slo - slack), _up(shi + slack))

    def contributions(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        """Width contributed by each variable: sum of |c_k| r^k over shifts k involving it."""
        mid = np.clip(0.5 * (lo + hi), lo, hi)
        rad = np.maximum(hi - mid, mid - lo)
        coef, err = self.taylor(mid)
        w = (np.abs(coef) + err) * self._monomials(rad, self.shift_exp)
        return w @ (self.shift_exp > 0).astype(float)


def enclose(form: CenteredForm, lo: np.ndarray, hi: np.ndarray) -> IntervalArray:
    """Intersection of the centered-form and natural enclosures."""
    a = form(lo, hi)
    b = natural_enclosure(form.poly, lo, hi)
    return IntervalArray(np.maximum(a.lo, b.lo), np.minimum(a.hi, b.hi))
