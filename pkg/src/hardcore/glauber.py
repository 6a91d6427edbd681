"""Single-site Glauber dynamics for the hard-core model, with imbalance statistics and exact bottleneck ratios.

Mixing times are not estimated: at the graph sizes reachable here they are
not exponentially separated in any observable way.  Mode crossings of the
imbalance and the exact ratio mu(I_B) / min(mu(I_1), mu(I_2)) serve as the
measurable proxies for bimodality.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Literal

import numpy as np

from .exact import class_measures
from .graphs import Graph

Start = Literal["empty", "side1-full", "side2-full"]


@dataclass(frozen=True)
class ChainState:
    graph: Graph
    occupied: frozenset[int]
    step_count: int = 0

    def __post_init__(self) -> None:
        if self.step_count < 0:
            raise ValueError("step_count must be nonnegative")
        if not self.graph.is_independent(self.occupied):
            raise ValueError("occupied set is not independent")


def glauber_step(state: ChainState, lam: float, rng: np.random.Generator) -> ChainState:
    """One update: pick v uniformly, propose adding it w.p. lam/(1+lam) (else removing it), reject if not independent."""
    g = state.graph
    v = int(rng.integers(g.n_vertices))
    insert = rng.random() < lam / (1 + lam)
    occ = state.occupied
    if insert:
        if v not in occ and not (g.adjacency[v] & occ):
            occ = occ | {v}
    else:
        occ = occ - {v}
    return ChainState(g, occ, state.step_count + 1)


@dataclass
class TrajectoryStats:
    imbalance_series: np.ndarray
    occupancy_series: np.ndarray
    crossings: int
    acceptance_rate: float
    steps: int
    burn_in: int
    sample_stride: int
    band: float
    lam: float
    seed: int
    start: str
    final_state: frozenset[int] = frozenset()
    state_series: np.ndarray | None = field(default=None, repr=False)

    def to_dict(self, series: bool = True) -> dict:
        d = asdict(self)
        d["final_state"] = sorted(self.final_state)
        d.pop("state_series")
        if series:
            d["imbalance_series"] = self.imbalance_series.tolist()
            d["occupancy_series"] = self.occupancy_series.tolist()
        else:
            d.pop("imbalance_series")
            d.pop("occupancy_series")
        d["n_samples"] = int(self.imbalance_series.size)
        return d

    def empirical_distribution(self) -> dict[frozenset[int], float]:
        """Visit frequencies of the recorded states (needs ``record_states=True``)."""
        if self.state_series is None:
            raise ValueError("states were not recorded")
        keys, counts = np.unique(self.state_series, return_counts=True)
        total = counts.sum()
        return {_unmask(int(k)): c / total for k, c in zip(keys, counts)}


def _unmask(m: int) -> frozenset[int]:
    out, i = [], 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def count_crossings(series: np.ndarray, band: float) -> int:
    """Number of passages from above +band to below -band or back (values inside the band do not reset)."""
    side = 0
    n = 0
    for x in series:
        s = 1 if x > band else (-1 if x < -band else 0)
        if s and side and s != side:
            n += 1
        if s:
            side = s
    return n


def _start_mask(g: Graph, start: Start) -> int:
    if start == "empty":
        return 0
    if start not in ("side1-full", "side2-full"):
        raise ValueError(f"unknown start {start!r}")
    s1, s2 = g.sides()
    side = s1 if start == "side1-full" else s2
    return sum(1 << v for v in side)


def run_chain(
    g: Graph,
    lam: float,
    steps: int,
    burn_in: int = 0,
    sample_stride: int | None = None,
    seed: int = 0,
    start: Start = "empty",
    band: float = 0.2,
    record_states: bool = False,
    block: int = 1 << 16,
) -> TrajectoryStats:
    """Run ``steps`` updates and sample after ``burn_in`` steps and every ``sample_stride`` steps thereafter.

    ``sample_stride`` defaults to one sweep (the number of vertices).  The
    imbalance is (|I & V1| - |I & V2|) / n with n the mean side size; it is
    NaN for graphs without a bipartition.
    """
    if steps < burn_in or burn_in < 0:
        raise ValueError("need 0 <= burn_in <= steps")
    if not lam > 0:
        raise ValueError("activity must be positive")
    nv = g.n_vertices
    stride = nv if sample_stride is None else int(sample_stride)
    if stride < 1:
        raise ValueError("sample_stride must be positive")
    masks = g.neighbor_masks
    bip = g.bipartition is not None
    if bip:
        s1, s2 = g.sides()
        m1 = sum(1 << v for v in s1)
        m2 = sum(1 << v for v in s2)
        half = (len(s1) + len(s2)) / 2
    occ = _start_mask(g, start)
    rng = np.random.default_rng(np.uint64(seed))
    p_ins = lam / (1 + lam)

    n_samples = len(range(burn_in, steps + 1, stride))
    imb = np.empty(n_samples)
    dens = np.empty(n_samples)
    states = np.empty(n_samples, dtype=np.int64) if record_states else None
    k = 0
    next_sample = burn_in
    accepted = 0

    def record(o: int) -> None:
        nonlocal k
        imb[k] = ((o & m1).bit_count() - (o & m2).bit_count()) / half if bip else np.nan
        dens[k] = o.bit_count() / nv
        if states is not None:
            states[k] = o
        k += 1

    t = 0
    if next_sample == 0:
        record(occ)
        next_sample += stride
    while t < steps:
        m = min(block, steps - t)
        vs = rng.integers(nv, size=m).tolist()
        ins = (rng.random(m) < p_ins).tolist()
        for v, i in zip(vs, ins):
            bit = 1 << v
            if i:
                if not occ & masks[v]:
                    occ |= bit
                    accepted += 1
            else:
                occ &= ~bit
                accepted += 1
            t += 1
            if t == next_sample:
                record(occ)
                next_sample += stride
    return TrajectoryStats(
        imbalance_series=imb,
        occupancy_series=dens,
        crossings=count_crossings(imb, band) if bip else 0,
        acceptance_rate=accepted / steps if steps else 0.0,
        steps=steps,
        burn_in=burn_in,
        sample_stride=stride,
        band=band,
        lam=float(lam),
        seed=seed,
        start=start,
        final_state=_unmask(occ),
        state_series=states,
    )


@dataclass(frozen=True)
class BottleneckResult:
    ratio: float
    mu_1: float
    mu_2: float
    mu_B: float
    degenerate: bool

    def to_dict(self) -> dict:
        return asdict(self)


def bottleneck_ratio(g: Graph, lam, delta) -> BottleneckResult:
    """Exact mu(I_B) / min(mu(I_1), mu(I_2)); degenerate (ratio inf) when the smaller class has measure zero."""
    cm = class_measures(g, lam, delta)
    lo = min(cm.mu_1, cm.mu_2)
    if lo == 0:
        return BottleneckResult(float("inf"), float(cm.mu_1), float(cm.mu_2), float(cm.mu_B), True)
    ratio = Fraction(cm.mu_B) / Fraction(lo) if isinstance(lo, Fraction) else cm.mu_B / lo
    return BottleneckResult(float(ratio), float(cm.mu_1), float(cm.mu_2), float(cm.mu_B), False)


def total_variation(p: dict, q: dict) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(float(p.get(k, 0)) - float(q.get(k, 0))) for k in keys)
