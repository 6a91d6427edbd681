"""Interval branch-and-bound for polynomial sign claims over semialgebraic regions."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Literal

import numpy as np

from .interval import CenteredForm, enclose, float_interval
from .poly import VARIABLES, PolynomialExpr

Relation = Literal[">", ">=", "<", "<=", "="]
Claim = Literal["positive", "negative"]
_FLIP = {">": "<", ">=": "<=", "<": ">", "<=": ">=", "=": "="}


class Status(str, Enum):
    CERTIFIED = "Certified"
    FALSIFIED = "Falsified"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class RegionSpec:
    """A box in (alpha, beta, gamma, delta) intersected with polynomial sign conditions ``g rel 0``."""

    box: tuple[tuple[Fraction, Fraction], ...]
    constraints: tuple[tuple[PolynomialExpr, str], ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.box) != 4:
            raise ValueError("box needs one interval per variable")
        box = []
        for lo, hi in self.box:
            if any(isinstance(x, float) and not np.isfinite(x) for x in (lo, hi)):
                raise ValueError("region box must be bounded")
            lo, hi = Fraction(lo), Fraction(hi)
            if lo > hi:
                raise ValueError("empty box interval")
            box.append((lo, hi))
        object.__setattr__(self, "box", tuple(box))
        for _, rel in self.constraints:
            if rel not in _FLIP:
                raise ValueError(f"unknown relation {rel!r}")
        object.__setattr__(self, "constraints", tuple(self.constraints))

    @classmethod
    def unit(cls, constraints=(), name: str = "") -> RegionSpec:
        return cls(((0, 1),) * 4, tuple(constraints), name)

    def __and__(self, other: RegionSpec) -> RegionSpec:
        box = tuple((max(a[0], b[0]), min(a[1], b[1])) for a, b in zip(self.box, other.box))
        name = " & ".join(n for n in (self.name, other.name) if n)
        return RegionSpec(box, self.constraints + other.constraints, name)

    def normalized(self, margin: Fraction) -> list[tuple[PolynomialExpr, Fraction, bool]]:
        """Constraints as ``(g, t, is_equality)`` meaning ``g >= t`` (or ``g = 0``).

        Strict conditions ``g > 0`` become ``g >= margin``; ``g < 0`` becomes
        ``-g >= margin``; non-strict ones keep threshold 0.
        """
        out = []
        for g, rel in self.constraints:
            if rel == "=":
                out.append((g, Fraction(0), True))
            elif rel in (">", ">="):
                out.append((g, margin if rel == ">" else Fraction(0), False))
            else:
                out.append((-g, margin if rel == "<" else Fraction(0), False))
        return out

    def contains_exact(self, point, margin: Fraction = Fraction(0)) -> bool:
        x = [Fraction(v) for v in point]
        if any(not lo <= v <= hi for v, (lo, hi) in zip(x, self.box)):
            return False
        for g, t, eq in self.normalized(Fraction(margin)):
            v = g.evaluate_exact(x)
            if (eq and v != 0) or (not eq and v < t):
                return False
        return True


@dataclass
class CertificateReport:
    status: Status
    claim: str
    region: str
    witness: tuple[Fraction, ...] | None
    cells_processed: int
    max_depth_reached: int
    margin: float
    max_depth: int
    closed_cells: int = 0
    discarded_cells: int = 0
    undecided_cells: int = 0
    region_empty: bool = False
    elapsed_seconds: float = 0.0
    undecided_sample: list[list[list[float]]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status.value
        if self.witness is not None:
            d["witness"] = {v: str(x) for v, x in zip(VARIABLES, self.witness)}
            d["witness_float"] = {v: float(x) for v, x in zip(VARIABLES, self.witness)}
        return d


class _Compiled:
    def __init__(self, g: PolynomialExpr, t: Fraction, eq: bool):
        self.form = CenteredForm(g)
        self.poly = g
        self.t = t
        self.tf = float(t)
        self.t_lo, self.t_hi = float_interval(t)
        self.eq = eq
        self.linear = g.degree <= 1
        if self.linear:
            c = np.zeros(5)
            for coef, e in g.terms:
                c[4 if sum(e) == 0 else e.index(1)] = float(coef)
            self.lin = c

    def status(self, lo, hi):
        """(certainly_violated, certainly_satisfied, enclosure)."""
        enc = enclose(self.form, lo, hi)
        if self.eq:
            return (enc.lo > 0) | (enc.hi < 0), np.zeros(lo.shape[0], bool), enc
        return enc.hi < self.t_lo, enc.lo >= self.t_hi, enc


def _contract(cons: list[_Compiled], lo: np.ndarray, hi: np.ndarray) -> None:
    """Shrink boxes using the linear constraints (conservatively: bounds are loosened by a relative 1e-12)."""
    for c in cons:
        if not c.linear:
            continue
        w = c.lin[:4]
        sides = (">=",) if not c.eq else (">=", "<=")
        for side in sides:
            sgn = 1.0 if side == ">=" else -1.0
            ws, c0, t = sgn * w, sgn * c.lin[4], sgn * c.tf
            top = np.where(ws > 0, ws * hi, ws * lo)  # max of ws_i x_i over the box
            total = top.sum(axis=1)
            for i in range(4):
                if ws[i] == 0:
                    continue
                rest = total - top[:, i]
                bound = (t - c0 - rest) / ws[i]
                slack = 1e-12 * (np.abs(t) + np.abs(c0) + np.abs(top).sum(axis=1)) / abs(ws[i]) + 1e-300
                if ws[i] > 0:
                    lo[:, i] = np.maximum(lo[:, i], bound - slack)
                else:
                    hi[:, i] = np.minimum(hi[:, i], bound + slack)


def certify_sign(
    p: PolynomialExpr,
    region: RegionSpec,
    claim: Claim = "positive",
    margin=Fraction(1, 100),
    max_depth: int = 24,
    max_cells: int = 5_000_000,
    batch: int = 4096,
    witness_checks: int = 200,
    label: str = "",
) -> CertificateReport:
    """Prove ``p > 0`` (or ``p < 0``) on the margin-shrunk region, or find an exact counterexample.

    Cells are bisected along the variable with the largest scaled
    contribution to the enclosure widths.  A cell is closed once the claim's
    enclosure has the strict sign, and discarded once some constraint is
    certainly violated.  Cells reaching ``max_depth`` bisections are left
    undecided.  Candidate counterexamples are cell midpoints; they are
    accepted only after an exact rational check.
    """
    if claim not in ("positive", "negative"):
        raise ValueError("claim must be 'positive' or 'negative'")
    margin = Fraction(margin)
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    t0 = time.perf_counter()
    target = p if claim == "positive" else -p
    tform = CenteredForm(target)
    cons = [_Compiled(g, t, eq) for g, t, eq in region.normalized(margin)]

    lo0 = np.array([[float_interval(a)[0] for a, _ in region.box]])
    hi0 = np.array([[float_interval(b)[1] for _, b in region.box]])
    if not np.all(np.isfinite(lo0)) or not np.all(np.isfinite(hi0)):
        raise ValueError("region box must be bounded")
    stack = [(lo0, hi0, np.zeros(1, dtype=np.int64))]
    report = CertificateReport(
        Status.CERTIFIED, label or "claim", region.name, None, 0, 0, float(margin), max_depth
    )
    checks_left = witness_checks

    def try_witness(mid: np.ndarray) -> tuple[Fraction, ...] | None:
        nonlocal checks_left
        for x in mid:
            if checks_left <= 0:
                return None
            checks_left -= 1
            pt = tuple(Fraction(float(v)) for v in x)
            if target.evaluate_exact(pt) <= 0 and region.contains_exact(pt, margin):
                return pt
        return None

    while stack:
        lo, hi, depth = stack.pop()
        if lo.shape[0] > batch:
            stack.append((lo[batch:], hi[batch:], depth[batch:]))
            lo, hi, depth = lo[:batch], hi[:batch], depth[:batch]
        lo, hi = lo.copy(), hi.copy()
        report.cells_processed += lo.shape[0]
        report.max_depth_reached = max(report.max_depth_reached, int(depth.max()))
        _contract(cons, lo, hi)
        keep = np.all(lo <= hi, axis=1)
        report.discarded_cells += int((~keep).sum())
        lo, hi, depth = lo[keep], hi[keep], depth[keep]
        if not lo.shape[0]:
            continue
        alive = np.ones(lo.shape[0], bool)
        certain = np.ones(lo.shape[0], bool)
        undecided_cons = []
        for c in cons:
            viol, sat, enc = c.status(lo, hi)
            alive &= ~viol
            certain &= sat
            undecided_cons.append((c, ~sat & ~viol, enc))
        report.discarded_cells += int((~alive).sum())
        enc = enclose(tform, lo, hi)
        closed = alive & (enc.lo > 0)
        report.closed_cells += int(closed.sum())
        open_ = alive & ~closed
        if not open_.any():
            continue
        # exact counterexample search at midpoints where the float value already fails
        mid = 0.5 * (lo + hi)
        fval = target.evaluate(*mid.T)
        cand = open_ & (np.atleast_1d(fval) <= 0)
        if cand.any() and checks_left > 0:
            ok = np.ones(lo.shape[0], bool)
            for c in cons:
                v = np.atleast_1d(c.poly.evaluate(*mid.T))
                ok &= (v == 0) if c.eq else (v >= c.tf)
            w = try_witness(mid[cand & ok][:8])
            if w is not None:
                report.status = Status.FALSIFIED
                report.witness = w
                break
        at_limit = open_ & (depth >= max_depth)
        report.undecided_cells += int(at_limit.sum())
        for i in np.flatnonzero(at_limit)[: max(0, 20 - len(report.undecided_sample))]:
            report.undecided_sample.append([[float(lo[i, j]), float(hi[i, j])] for j in range(4)])
        split = open_ & ~at_limit
        if report.cells_processed + 2 * int(split.sum()) > max_cells:
            report.undecided_cells += int(split.sum())
            report.notes.append("cell budget exhausted")
            break
        if not split.any():
            continue
        lo, hi, depth = lo[split], hi[split], depth[split]
        score = _split_scores(tform, enc, lo, hi, split, undecided_cons)
        axis = np.argmax(score, axis=1)
        rows = np.arange(lo.shape[0])
        m = 0.5 * (lo[rows, axis] + hi[rows, axis])
        lo_a, hi_a = lo.copy(), hi.copy()
        hi_a[rows, axis] = m
        lo_b, hi_b = lo.copy(), hi.copy()
        lo_b[rows, axis] = m
        stack.append((np.concatenate([lo_a, lo_b]), np.concatenate([hi_a, hi_b]), np.concatenate([depth + 1, depth + 1])))

    if report.status is not Status.FALSIFIED and report.undecided_cells:
        report.status = Status.UNDECIDED
    report.region_empty = report.status is Status.CERTIFIED and report.closed_cells == 0
    report.elapsed_seconds = time.perf_counter() - t0
    return report


def _split_scores(tform, enc, lo, hi, mask, undecided_cons) -> np.ndarray:
    width = np.maximum(enc.hi[mask] - enc.lo[mask], 1e-300)
    score = tform.contributions(lo, hi) / width[:, None]
    for c, und, cenc in undecided_cons:
        u = und[mask]
        # linear constraints are enforced exactly by contraction; splitting does not help them
        if c.linear or not u.any():
            continue
        cw = np.maximum(cenc.hi[mask][u] - cenc.lo[mask][u], 1e-300)
        score[u] += c.form.contributions(lo[u], hi[u]) / cw[:, None]
    # fall back to the widest side where no contribution is informative
    flat = ~np.any(score > 0, axis=1)
    score[flat] = (hi - lo)[flat]
    # never split a degenerate side
    score[(hi - lo) <= 0] = -1.0
    return score
