"""Exact independent-set counting on small graphs.

Rational activities (``int`` or ``Fraction``) give exact ``Fraction`` results.
Float activities are converted to the exact binary rational they represent,
the sum is formed exactly and rounded once at the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from numbers import Rational

import numpy as np

from .graphs import Graph

MAX_SIDE = 28
MAX_GENERAL = 30
MAX_GIBBS = 20

Number = int | float | Fraction


class BudgetExceeded(ValueError):
    """Instance too large for exhaustive enumeration."""


def _exact(lam) -> tuple[Fraction, bool]:
    if isinstance(lam, Rational):
        return Fraction(lam), True
    return Fraction(float(lam)), False


def _finish(x: Fraction, rational: bool):
    return x if rational else float(x)


def _check_activity(lam) -> None:
    if not lam > 0:
        raise ValueError("activity must be positive")


@dataclass(frozen=True)
class BivariateIndependencePolynomial:
    """``counts[a][b]`` = number of independent sets with ``a`` side-1 and ``b`` side-2 vertices."""

    counts: tuple[tuple[int, ...], ...]

    @property
    def n1(self) -> int:
        return len(self.counts) - 1

    @property
    def n2(self) -> int:
        return len(self.counts[0]) - 1

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def evaluate(self, lam):
        """Z(lam) = sum of counts[a][b] * lam^(a+b)."""
        x, rational = _exact(lam)
        by_size = [0] * (self.n1 + self.n2 + 1)
        for a, row in enumerate(self.counts):
            for b, c in enumerate(row):
                by_size[a + b] += c
        return _finish(_horner(by_size, x), rational)

    def as_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=object)

    def to_csv(self) -> str:
        lines = ["a,b,count"]
        for a, row in enumerate(self.counts):
            lines.extend(f"{a},{b},{c}" for b, c in enumerate(row) if c)
        return "\n".join(lines) + "\n"


def _horner(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _side_masks(g: Graph, side1: list[int], side2: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(side2)}
    return [sum(1 << pos[w] for w in g.adjacency[v]) for v in side1]


def _free_histogram(masks: list[int], n2: int, chunk_bits: int = 16) -> np.ndarray:
    """hist[a, f]: number of subsets S of side 1 with |S| = a and f side-2 vertices outside N(S)."""
    n1 = len(masks)
    if n2 <= 63:
        flat = np.zeros((n1 + 1) * (n2 + 1), dtype=np.int64)
        lo = min(n1, chunk_bits)
        nb = np.zeros(1, dtype=np.uint64)
        size = np.zeros(1, dtype=np.int64)
        for m in masks[:lo]:
            nb = np.concatenate([nb, nb | np.uint64(m)])
            size = np.concatenate([size, size + 1])
        for hi in range(1 << (n1 - lo)):
            extra, k = 0, 0
            for j in range(n1 - lo):
                if hi >> j & 1:
                    extra |= masks[lo + j]
                    k += 1
            free = n2 - np.bitwise_count(nb | np.uint64(extra)).astype(np.int64)
            flat += np.bincount((size + k) * (n2 + 1) + free, minlength=flat.size)
        return flat.reshape(n1 + 1, n2 + 1)
    hist = np.zeros((n1 + 1, n2 + 1), dtype=np.int64)
    for r in range(n1 + 1):
        for sub in combinations(masks, r):
            u = 0
            for m in sub:
                u |= m
            hist[r, n2 - u.bit_count()] += 1
    return hist


def independence_polynomial(g: Graph) -> BivariateIndependencePolynomial:
    """Count independent sets of a bipartite graph by their intersection sizes with each side.

    Every subset S of side 1 is independent; it extends by any subset of the
    side-2 vertices outside N(S).  Enumeration runs over the smaller side.
    """
    side1, side2 = g.sides()
    swap = len(side1) > len(side2)
    small, large = (side2, side1) if swap else (side1, side2)
    if len(small) > MAX_SIDE:
        raise BudgetExceeded(f"smaller side has {len(small)} > {MAX_SIDE} vertices")
    hist = _free_histogram(_side_masks(g, small, large), len(large))
    ns, nl = len(small), len(large)
    counts = [[0] * (nl + 1) for _ in range(ns + 1)]
    for a in range(ns + 1):
        for f in range(nl + 1):
            h = int(hist[a, f])
            if h:
                for b in range(f + 1):
                    counts[a][b] += h * comb(f, b)
    if swap:
        counts = [list(col) for col in zip(*counts)]
    return BivariateIndependencePolynomial(tuple(tuple(r) for r in counts))


def _components(masks: tuple[int, ...], alive: int) -> list[int]:
    comps = []
    while alive:
        seed = alive & -alive
        comp, frontier = seed, seed
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = masks[v] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        alive &= ~comp
    return comps


def _poly_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _poly_add(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    if len(p) < len(q):
        p, q = q, p
    return tuple(a + (q[i] if i < len(q) else 0) for i, a in enumerate(p))


def size_polynomial(g: Graph) -> tuple[int, ...]:
    """Coefficients i_k = number of independent sets of size k (k = 0, 1, ...)."""
    if g.n_vertices > MAX_GENERAL:
        raise BudgetExceeded(f"{g.n_vertices} > {MAX_GENERAL} vertices")
    masks = g.neighbor_masks

    @lru_cache(maxsize=None)
    def connected(alive: int) -> tuple[int, ...]:
        if alive & (alive - 1) == 0:
            return (1, 1)
        # branch on the vertex of largest degree inside the component
        v = max(_bits(alive), key=lambda u: (masks[u] & alive).bit_count())
        out = solve(alive & ~(1 << v))
        inn = solve(alive & ~(1 << v) & ~masks[v])
        return _poly_add(out, (0,) + inn)

    def solve(alive: int) -> tuple[int, ...]:
        poly: tuple[int, ...] = (1,)
        for comp in _components(masks, alive):
            poly = _poly_mul(poly, connected(comp))
        return poly

    return solve((1 << g.n_vertices) - 1)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def partition_function(g: Graph, lam):
    """Z_G(lam) = sum over independent sets I of lam^|I|."""
    _check_activity(lam)
    x, rational = _exact(lam)
    return _finish(_horner(size_polynomial(g), x), rational)


@dataclass(frozen=True)
class ClassMeasures:
    """Gibbs mass of side-1-heavy, side-2-heavy and nearly balanced independent sets."""

    mu_1: Number
    mu_2: Number
    mu_B: Number
    delta: Number


def _slack(delta) -> Fraction:
    if isinstance(delta, Rational):
        return Fraction(delta)
    # recover the intended rational so that thresholds like n/3 compare exactly
    return Fraction(float(delta)).limit_denominator(10**6)


def class_weights(poly: BivariateIndependencePolynomial, lam, delta) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (unnormalised) weights of the three classes."""
    x, _ = _exact(lam)
    d = _slack(delta)
    n = Fraction(poly.n1 + poly.n2, 2)
    thr = d * n
    w1 = w2 = wb = Fraction(0)
    powers = [x**k for k in range(poly.n1 + poly.n2 + 1)]
    for a, row in enumerate(poly.counts):
        for b, c in enumerate(row):
            if not c:
                continue
            w = c * powers[a + b]
            if a > b + thr:
                w1 += w
            elif b > a + thr:
                w2 += w
            else:
                wb += w
    return w1, w2, wb


def class_measures(g: Graph, lam, delta) -> ClassMeasures:
    """Gibbs probabilities of I_1, I_2 (strict imbalance above delta*n) and the balanced rest.

    ``n`` is the average side size, equal to the side size for balanced bipartitions.
    """
    _check_activity(lam)
    if delta < 0:
        raise ValueError("slack must be nonnegative")
    _, rational = _exact(lam)
    w1, w2, wb = class_weights(independence_polynomial(g), lam, delta)
    z = w1 + w2 + wb
    m1, m2 = w1 / z, w2 / z
    mb = 1 - m1 - m2
    if rational:
        return ClassMeasures(m1, m2, mb, delta)
    f1, f2 = float(m1), float(m2)
    return ClassMeasures(f1, f2, float(mb), delta)


def independent_sets(g: Graph) -> list[frozenset[int]]:
    """All independent sets, by depth-first extension in increasing vertex order."""
    masks = g.neighbor_masks
    out: list[frozenset[int]] = []

    def rec(start: int, chosen: list[int], blocked: int) -> None:
        out.append(frozenset(chosen))
        for v in range(start, g.n_vertices):
            if not blocked >> v & 1:
                chosen.append(v)
                rec(v + 1, chosen, blocked | masks[v])
                chosen.pop()

    rec(0, [], 0)
    return out


def exact_gibbs_distribution(g: Graph, lam) -> dict[frozenset[int], Number]:
    """Map every independent set I to lam^|I| / Z."""
    _check_activity(lam)
    if g.n_vertices > MAX_GIBBS:
        raise BudgetExceeded(f"{g.n_vertices} > {MAX_GIBBS} vertices")
    x, rational = _exact(lam)
    sets = independent_sets(g)
    weights = [x ** len(s) for s in sets]
    z = sum(weights, Fraction(0))
    return {s: _finish(w / z, rational) for s, w in zip(sets, weights)}
