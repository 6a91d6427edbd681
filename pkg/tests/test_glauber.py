from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hardcore.exact import exact_gibbs_distribution
from hardcore.glauber import (
    ChainState,
    bottleneck_ratio,
    count_crossings,
    glauber_step,
    run_chain,
    total_variation,
)
from hardcore.graphs import Graph, erdos_renyi, generate_bipartite_regular

K2 = Graph.from_edges(2, [(0, 1)], bipartite_n1=1)
STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)], bipartite_n1=1)
C4 = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}), (frozenset({0, 2}), frozenset({1, 3})))
K33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)], bipartite_n1=3)


class ScriptedRng:
    """Returns fixed choices in place of numpy's generator."""

    def __init__(self, vertex, u):
        self.vertex, self.u = vertex, u

    def integers(self, n):
        return self.vertex

    def random(self):
        return self.u


def test_state_must_be_independent():
    with pytest.raises(ValueError):
        ChainState(K2, frozenset({0, 1}))
    with pytest.raises(ValueError):
        ChainState(K2, frozenset(), -1)


def test_blocked_insertion_rejected():
    s = ChainState(K2, frozenset({0}))
    t = glauber_step(s, 5.0, ScriptedRng(1, 0.0))
    assert t.occupied == {0} and t.step_count == 1


def test_insertion_and_removal():
    s = ChainState(K2, frozenset())
    s = glauber_step(s, 1.0, ScriptedRng(1, 0.2))
    assert s.occupied == {1}
    s = glauber_step(s, 1.0, ScriptedRng(1, 0.9))
    assert s.occupied == frozenset()


def test_step_kernel_matches_fast_chain():
    # the single-step kernel and the bitmask loop sample the same stationary law
    rng = np.random.default_rng(5)
    s = ChainState(STAR, frozenset())
    counts: dict = {}
    for _ in range(200_000):
        s = glauber_step(s, 2.0, rng)
        counts[s.occupied] = counts.get(s.occupied, 0) + 1
    emp = {k: v / 200_000 for k, v in counts.items()}
    assert total_variation(emp, exact_gibbs_distribution(STAR, 2.0)) < 0.02


def test_single_vertex_occupation():
    g = Graph(1)
    for lam in (0.5, 3.0):
        st_ = run_chain(g, lam, 1_000_000, seed=1)
        assert abs(st_.occupancy_series.mean() - lam / (1 + lam)) < 0.005


@pytest.mark.parametrize("seed", range(3))
def test_tiny_activity_empties(seed):
    g = erdos_renyi(10, 0.3, seed)
    st_ = run_chain(g, 1e-6, 100_000, seed=seed, start="empty")
    assert st_.final_state == frozenset()
    full = generate_bipartite_regular(5, 2, seed)
    assert run_chain(full, 1e-6, 100_000, seed=seed, start="side1-full").final_state == frozenset()


@pytest.mark.parametrize("g", [K2, STAR, C4, Graph(2)], ids=["K2", "star", "C4", "empty2"])
@pytest.mark.parametrize("lam", [1.0, 2.0])
def test_stationarity_small_graphs(g, lam):
    exact = exact_gibbs_distribution(g, lam)
    for seed in range(3):
        st_ = run_chain(g, lam, 1_000_000, sample_stride=1, seed=seed, record_states=True)
        assert total_variation(st_.empirical_distribution(), exact) < 0.02


@settings(max_examples=25)
@given(st.integers(1, 9), st.floats(0, 1), st.integers(0, 2**32), st.floats(0.1, 20), st.integers(0, 2**32))
def test_independence_maintained(n, p, gseed, lam, seed):
    g = erdos_renyi(n, p, gseed)
    st_ = run_chain(g, lam, 2_000, sample_stride=1, seed=seed, record_states=True)
    masks = g.neighbor_masks
    for m in st_.state_series.tolist():
        assert all(not (m >> v & 1 and m & masks[v]) for v in range(n))


def test_seed_determinism():
    g = generate_bipartite_regular(6, 3, 0)
    a = run_chain(g, 4.0, 50_000, seed=9, start="side2-full")
    b = run_chain(g, 4.0, 50_000, seed=9, start="side2-full")
    c = run_chain(g, 4.0, 50_000, seed=10, start="side2-full")
    assert np.array_equal(a.imbalance_series, b.imbalance_series) and a.final_state == b.final_state
    assert not np.array_equal(a.imbalance_series, c.imbalance_series)


def test_side1_start_imbalance():
    g = generate_bipartite_regular(12, 3, 0)
    st_ = run_chain(g, 6.0, 12_000, seed=0, start="side1-full")
    assert st_.imbalance_series[0] == 1.0
    assert st_.occupancy_series[0] == 0.5


def test_series_shapes():
    g = generate_bipartite_regular(4, 2, 1)
    st_ = run_chain(g, 2.0, 1000, burn_in=100, sample_stride=50, seed=0)
    assert len(st_.imbalance_series) == len(st_.occupancy_series) == len(range(100, 1001, 50))
    assert st_.crossings <= len(st_.imbalance_series)
    assert 0 < st_.acceptance_rate <= 1
    d = st_.to_dict()
    assert d["n_samples"] == len(st_.imbalance_series)


def test_non_bipartite_imbalance_nan():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    st_ = run_chain(g, 1.0, 300, seed=0)
    assert np.all(np.isnan(st_.imbalance_series)) and st_.crossings == 0


def test_chain_argument_checks():
    with pytest.raises(ValueError):
        run_chain(K2, 1.0, 10, burn_in=11)
    with pytest.raises(ValueError):
        run_chain(K2, 0.0, 10)
    with pytest.raises(ValueError):
        run_chain(K2, 1.0, 10, start="middle")
    with pytest.raises(ValueError):
        run_chain(Graph(2), 1.0, 10, start="side1-full")


def test_count_crossings():
    assert count_crossings(np.array([0.5, 0.1, -0.5, 0.0, 0.6, -0.3]), 0.2) == 3
    assert count_crossings(np.array([0.5, 0.1, 0.15, 0.3]), 0.2) == 0
    assert count_crossings(np.array([]), 0.2) == 0


@given(st.lists(st.floats(-1, 1), max_size=200), st.floats(0, 0.9))
def test_crossings_bounded(xs, band):
    assert count_crossings(np.array(xs), band) <= max(len(xs) - 1, 0)


def test_bottleneck_k33():
    res = bottleneck_ratio(K33, 10, Fraction(1, 3))
    assert res.ratio < 1 and not res.degenerate
    assert res.mu_1 == res.mu_2


@pytest.mark.parametrize("slack", [1, 1.5])
def test_bottleneck_degenerate(slack):
    res = bottleneck_ratio(C4, 3, slack)
    assert res.degenerate and res.ratio == float("inf")


def test_bottleneck_random_instances():
    below = sum(bottleneck_ratio(generate_bipartite_regular(10, 3, s), 6, 0.2).ratio < 1 for s in range(20))
    assert below > 10


def test_bottleneck_trend_in_activity():
    lams = (1, 2, 4, 6, 10)
    monotone = 0
    for s in range(20):
        g = generate_bipartite_regular(10, 3, s)
        r = [bottleneck_ratio(g, lam, 0.2).ratio for lam in lams]
        monotone += all(y <= x for x, y in zip(r, r[1:]))
    assert monotone > 10


def test_total_variation():
    assert total_variation({1: 0.5, 2: 0.5}, {1: 0.5, 2: 0.5}) == 0
    assert total_variation({1: 1.0}, {2: 1.0}) == 1
