from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from hardcore.exact import (
    BudgetExceeded,
    class_measures,
    exact_gibbs_distribution,
    independence_polynomial,
    independent_sets,
    partition_function,
    size_polynomial,
)
from hardcore.graphs import Graph, blowup, erdos_renyi, generate_bipartite_regular


def brute_sets(g: Graph):
    """Every vertex subset checked edge by edge (oracle independent of the library enumerators)."""
    out = []
    for r in range(g.n_vertices + 1):
        for s in combinations(range(g.n_vertices), r):
            ss = set(s)
            if all(not (u in ss and v in ss) for u, v in g.edges):
                out.append(frozenset(s))
    return out


def brute_z(g: Graph, lam) -> Fraction:
    return sum((Fraction(lam) ** len(s) for s in brute_sets(g)), Fraction(0))


K2 = Graph.from_edges(2, [(0, 1)], bipartite_n1=1)
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C4 = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}), (frozenset({0, 2}), frozenset({1, 3})))
C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
K33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)], bipartite_n1=3)

graphs = st.builds(erdos_renyi, st.integers(0, 8), st.floats(0, 1), st.integers(0, 2**32))
bip_graphs = st.builds(generate_bipartite_regular, st.integers(1, 6), st.integers(1, 4), st.integers(0, 2**32))
rationals = st.fractions(min_value=Fraction(1, 20), max_value=20, max_denominator=30)


def test_k2_polynomial():
    assert independence_polynomial(K2).counts == ((1, 1), (1, 0))


def test_c4_polynomial():
    c = independence_polynomial(C4).counts
    expected = {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (0, 2): 1}
    for a in range(3):
        for b in range(3):
            assert c[a][b] == expected.get((a, b), 0)
    assert sum(map(sum, c)) == len(brute_sets(C4)) == 7


@pytest.mark.parametrize("n", [1, 3, 5])
def test_empty_bipartite(n):
    g = Graph.from_edges(2 * n, [], bipartite_n1=n)
    c = independence_polynomial(g).counts
    assert all(c[a][b] == comb(n, a) * comb(n, b) for a in range(n + 1) for b in range(n + 1))


@given(bip_graphs)
def test_bivariate_invariants(g):
    poly = independence_polynomial(g)
    s1, s2 = g.sides()
    assert poly.counts[0][0] == 1
    assert poly.counts[1][0] == len(s1) and poly.counts[0][1] == len(s2)
    assert poly.total() == len(brute_sets(g))


def test_partition_function_examples():
    assert partition_function(K2, 1) == 3
    assert partition_function(P3, 2) == 11
    assert size_polynomial(P3) == (1, 3, 1)


@given(graphs, rationals)
def test_partition_function_matches_brute_force(g, lam):
    assert partition_function(g, lam) == brute_z(g, lam)


@given(bip_graphs, rationals)
def test_bivariate_sum_matches_partition_function(g, lam):
    assert independence_polynomial(g).evaluate(lam) == partition_function(g, lam)


@given(graphs, rationals)
def test_isolated_vertex_factor(g, lam):
    h = Graph(g.n_vertices + 1, g.edges)
    assert partition_function(h, lam) == partition_function(g, lam) * (1 + lam)


def test_float_activity_single_rounding():
    z = partition_function(P3, 0.1)
    assert isinstance(z, float)
    assert z == float(brute_z(P3, Fraction(0.1)))


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(1), Fraction(3)])
def test_blowup_identity_small(k, lam):
    for seed in range(5):
        g = erdos_renyi(5, 0.5, seed)
        assert partition_function(g, (1 + lam) ** k - 1) == partition_function(blowup(g, k), lam)


def test_symmetric_graph_equal_measures():
    for g in (K2, C4, K33):
        cm = class_measures(g, Fraction(7, 3), Fraction(1, 5))
        assert cm.mu_1 == cm.mu_2


@pytest.mark.parametrize("slack", [1, Fraction(3, 2), 2.0])
def test_large_slack_all_balanced(slack):
    cm = class_measures(K33, 10, slack)
    assert cm.mu_B == 1 and cm.mu_1 == 0 and cm.mu_2 == 0


def test_k33_measures_against_enumeration():
    lam, slack = Fraction(10), Fraction(1, 3)
    w = {"1": Fraction(0), "2": Fraction(0), "B": Fraction(0)}
    for s in brute_sets(K33):
        a = len(s & {0, 1, 2})
        b = len(s) - a
        key = "1" if a > b + 1 else ("2" if b > a + 1 else "B")
        w[key] += lam ** len(s)
    z = sum(w.values())
    cm = class_measures(K33, lam, slack)
    assert (cm.mu_1, cm.mu_2, cm.mu_B) == (w["1"] / z, w["2"] / z, w["B"] / z)


@given(bip_graphs, rationals, st.fractions(0, 1, max_denominator=10))
def test_measures_partition_unity(g, lam, slack):
    cm = class_measures(g, lam, slack)
    assert cm.mu_1 + cm.mu_2 + cm.mu_B == 1
    assert min(cm.mu_1, cm.mu_2, cm.mu_B) >= 0


def test_gibbs_examples():
    single = exact_gibbs_distribution(Graph(1), 3)
    assert single[frozenset({0})] == Fraction(3, 4)
    k2 = exact_gibbs_distribution(K2, 1)
    assert len(k2) == 3 and set(k2.values()) == {Fraction(1, 3)}
    c5 = exact_gibbs_distribution(C5, 2)
    assert partition_function(C5, 2) == 31
    assert all(p == Fraction(2 ** len(s), 31) for s, p in c5.items())


@given(graphs, st.floats(0.01, 50))
def test_gibbs_sums_to_one(g, lam):
    dist = exact_gibbs_distribution(g, lam)
    assert abs(sum(dist.values()) - 1) < 1e-12
    assert set(dist) == set(independent_sets(g)) == set(brute_sets(g))


def test_budgets():
    with pytest.raises(BudgetExceeded):
        exact_gibbs_distribution(Graph(21), 1)
    with pytest.raises(ValueError):
        partition_function(K2, 0)
    with pytest.raises(ValueError):
        class_measures(K2, 1, -1)
