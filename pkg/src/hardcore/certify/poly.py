"""Exact polynomials in (alpha, beta, gamma, delta) and arithmetic in Q(alpha, beta, gamma, delta)[sqrt(D)].

``D = (1-alpha-beta)^2 + 4(alpha-gamma)(beta-delta)`` is the discriminant that
appears when the overlap variable epsilon is eliminated.  Expressions built
from the four variables and ``sqrt(D)`` are kept as ``(p + q sqrt(D)) / r``
with polynomial ``p, q, r``; ``radical_split`` turns such an expression into
the pair ``(P1, P2)`` with ``expr * clearing = P1 + P2 sqrt(D)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

VARIABLES = ("alpha", "beta", "gamma", "delta")
RING, _A, _B, _G, _DL = ring(",".join(VARIABLES), QQ)
DISCRIMINANT = (1 - _A - _B) ** 2 + 4 * (_A - _G) * (_B - _DL)

Monomial = tuple[int, int, int, int]


def _q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    # sympy / gmpy rationals
    return Fraction(int(c.numerator), int(c.denominator))


@dataclass(frozen=True)
class PolynomialExpr:
    """Polynomial with exact rational coefficients, stored as sorted ``(coefficient, exponents)`` terms."""

    terms: tuple[tuple[Fraction, Monomial], ...]

    def __post_init__(self) -> None:
        acc: dict[Monomial, Fraction] = {}
        for c, e in self.terms:
            e = tuple(int(k) for k in e)
            if len(e) != 4 or min(e) < 0:
                raise ValueError(f"bad exponent vector {e}")
            acc[e] = acc.get(e, Fraction(0)) + _q(c)
        canon = tuple((c, e) for e, c in sorted(acc.items()) if c != 0)
        object.__setattr__(self, "terms", canon)

    # construction
    @classmethod
    def from_ring(cls, p) -> PolynomialExpr:
        return cls(tuple((_q(c), e) for e, c in p.terms()))

    @classmethod
    def parse(cls, text: str) -> PolynomialExpr:
        """Parse an expression in alpha, beta, gamma, delta (``^`` or ``**`` for powers)."""
        syms = {v: sympy.Symbol(v) for v in VARIABLES}
        expr = sympy.sympify(text.replace("^", "**"), locals=syms)
        extra = expr.free_symbols - set(syms.values())
        if extra:
            raise ValueError(f"unknown symbols {sorted(map(str, extra))}")
        return cls.from_ring(RING.from_expr(sympy.expand(expr)))

    @classmethod
    def constant(cls, c) -> PolynomialExpr:
        return cls(((Fraction(c), (0, 0, 0, 0)),))

    @classmethod
    def variable(cls, name: str) -> PolynomialExpr:
        e = [0, 0, 0, 0]
        e[VARIABLES.index(name)] = 1
        return cls(((Fraction(1), tuple(e)),))

    def to_ring(self):
        return RING({e: QQ(c.numerator, c.denominator) for c, e in self.terms}) if self.terms else RING(0)

    # algebra
    def __add__(self, other) -> PolynomialExpr:
        return PolynomialExpr(self.terms + _as_poly(other).terms)

    __radd__ = __add__

    def __neg__(self) -> PolynomialExpr:
        return PolynomialExpr(tuple((-c, e) for c, e in self.terms))

    def __sub__(self, other) -> PolynomialExpr:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> PolynomialExpr:
        return _as_poly(other) - self

    def __mul__(self, other) -> PolynomialExpr:
        return PolynomialExpr.from_ring(self.to_ring() * _as_poly(other).to_ring())

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolynomialExpr:
        return PolynomialExpr.from_ring(self.to_ring() ** k)

    # inspection
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for _, e in self.terms), default=0)

    @cached_property
    def exponents(self) -> np.ndarray:
        return np.array([e for _, e in self.terms], dtype=np.int64).reshape(-1, 4)

    @cached_property
    def float_coefficients(self) -> np.ndarray:
        return np.array([float(c) for c, _ in self.terms])

    def evaluate(self, alpha, beta, gamma, delta):
        """Floating-point evaluation, vectorised over broadcastable arrays."""
        pts = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (alpha, beta, gamma, delta)))
        out = np.zeros(pts[0].shape)
        for c, e in zip(self.float_coefficients, self.exponents):
            out = out + c * pts[0] ** e[0] * pts[1] ** e[1] * pts[2] ** e[2] * pts[3] ** e[3]
        return out.item() if out.ndim == 0 else out

    def evaluate_exact(self, point) -> Fraction:
        """Exact value at a point given as four rationals (floats are taken at their exact binary value)."""
        x = [Fraction(v) for v in point]
        total = Fraction(0)
        for c, e in self.terms:
            total += c * x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2] * x[3] ** e[3]
        return total

    def __str__(self) -> str:
        return str(self.to_ring().as_expr()) if self.terms else "0"


def _as_poly(x) -> PolynomialExpr:
    if isinstance(x, PolynomialExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return PolynomialExpr.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


D_POLY = PolynomialExpr.from_ring(DISCRIMINANT)


# --- Q(vars)[sqrt D] -------------------------------------------------------


def _ring_el(x):
    if isinstance(x, PolynomialExpr):
        return x.to_ring()
    if isinstance(x, Fraction):
        return RING(QQ(x.numerator, x.denominator))
    return RING(x)


class RadicalFraction:
    """``(p + q sqrt(D)) / r`` with polynomials ``p, q, r``, reduced by their common gcd."""

    __slots__ = ("p", "q", "r")

    def __init__(self, p, q=0, r=1):
        p, q, r = _ring_el(p), _ring_el(q), _ring_el(r)
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        g = p.gcd(q).gcd(r) if (p or q) else r
        if not g.is_ground:
            p, q, r = p.exquo(g), q.exquo(g), r.exquo(g)
        self.p, self.q, self.r = p, q, r

    @staticmethod
    def lift(x) -> RadicalFraction:
        return x if isinstance(x, RadicalFraction) else RadicalFraction(x)

    def __add__(self, o):
        o = RadicalFraction.lift(o)
        return RadicalFraction(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r)

    __radd__ = __add__

    def __neg__(self):
        return RadicalFraction(-self.p, -self.q, self.r)

    def __sub__(self, o):
        return self + (-RadicalFraction.lift(o))

    def __rsub__(self, o):
        return RadicalFraction.lift(o) - self

    def __mul__(self, o):
        o = RadicalFraction.lift(o)
        return RadicalFraction(
            self.p * o.p + self.q * o.q * DISCRIMINANT, self.p * o.q + self.q * o.p, self.r * o.r
        )

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RadicalFraction.lift(o)
        # multiply through by the conjugate of the divisor's numerator
        norm = o.p**2 - o.q**2 * DISCRIMINANT
        if norm == 0:
            raise ZeroDivisionError("division by an expression that vanishes identically")
        num = self * RadicalFraction(o.p, -o.q)
        return RadicalFraction(num.p * o.r, num.q * o.r, num.r * norm)

    def __rtruediv__(self, o):
        return RadicalFraction.lift(o) / self

    def __pow__(self, k: int):
        out = RadicalFraction(1)
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, alpha, beta, gamma, delta):
        """Floating-point value with sqrt(D) taken as the nonnegative root."""
        args = (alpha, beta, gamma, delta)
        p, q, r = (PolynomialExpr.from_ring(x).evaluate(*args) for x in (self.p, self.q, self.r))
        return (p + q * np.sqrt(D_POLY.evaluate(*args))) / r


def radical_symbols() -> dict[str, RadicalFraction]:
    """The four variables and ``sqrt_D`` as ``RadicalFraction`` objects."""
    out = {v: RadicalFraction(x) for v, x in zip(VARIABLES, (_A, _B, _G, _DL))}
    out["sqrt_D"] = RadicalFraction(0, 1)
    return out


def radical_split(expr: RadicalFraction, clearing=1) -> tuple[PolynomialExpr, PolynomialExpr]:
    """Exact ``(P1, P2)`` with ``expr * clearing = P1 + P2 sqrt(D)``.

    ``clearing`` (a polynomial, rational or ``RadicalFraction``) must cancel
    the denominator of ``expr`` down to a nonzero constant.
    """
    e = RadicalFraction.lift(expr) * RadicalFraction.lift(clearing if not isinstance(clearing, PolynomialExpr) else RadicalFraction(clearing))
    if not e.r.is_ground:
        raise ValueError("expression is not polynomial in sqrt(D) after clearing denominators")
    inv = 1 / e.r.LC
    return PolynomialExpr.from_ring(e.p * inv), PolynomialExpr.from_ring(e.q * inv)
