from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hardcore.tree import (
    contraction_factor,
    finite_tree_marginal,
    fixed_points,
    lambda_c,
    lambda_half,
    lambda_half_from_marginal,
    phi,
    tree_map,
)

above = st.integers(3, 6).flatmap(
    lambda d: st.tuples(st.just(d), st.floats(float(lambda_c(d)) * 1.01, 200.0))
)


def test_lambda_c_values():
    assert lambda_c(3) == 4
    assert lambda_c(4) == Fraction(27, 16)
    assert lambda_c(5) == Fraction(256, 243)
    # independent big-integer powering
    num, den = 1, 1
    for _ in range(5):
        num *= 5
    for _ in range(6):
        den *= 4
    assert lambda_c(6) == Fraction(num, den) == Fraction(3125, 4096)


@pytest.mark.parametrize("delta", [2, 1, 3.5])
def test_lambda_c_rejects(delta):
    with pytest.raises(ValueError):
        lambda_c(delta)


def test_phi_examples():
    assert phi(1 / 3, 4, 3) == pytest.approx(1 / 3, abs=1e-15)
    assert abs(phi(1 / 3, 4 + 1e-9, 3) - 1 / 3) < 1e-6
    cp = fixed_points(5, 3)
    assert abs(phi(phi(cp.p_plus, 5, 3), 5, 3) - cp.p_plus) < 1e-12
    with pytest.raises(ValueError):
        phi(0.0, 4, 3)


def test_fixed_points_critical():
    cp = fixed_points(4, 3)
    for p in (cp.p_minus, cp.p_star, cp.p_plus):
        assert abs(p - 1 / 3) < 1e-9
    assert cp.coincident


def test_fixed_points_curve_relation():
    cp = fixed_points(5, 3)
    a, b = cp.p_plus, cp.p_minus
    assert abs(a * a - 2 * a + a * b + 1 - 2 * b + b * b) < 1e-10


def test_below_critical_coincide():
    cp = fixed_points(3, 3)
    assert cp.p_plus - cp.p_minus < 1e-9


@given(above)
def test_fixed_point_invariants(args):
    d, lam = args
    cp = fixed_points(lam, d)
    assert cp.p_minus <= cp.p_star <= cp.p_plus
    assert cp.p_plus - cp.p_minus > 1e-9
    assert cp.q_plus == pytest.approx(cp.p_plus / (1 - cp.p_minus), rel=1e-12)
    assert cp.q_minus == pytest.approx(cp.p_minus / (1 - cp.p_plus), rel=1e-12)
    assert abs(phi(cp.p_plus, lam, d) - cp.p_minus) < 1e-12
    assert abs(phi(cp.p_minus, lam, d) - cp.p_plus) < 1e-12
    assert abs(lam * (1 - cp.q_plus) ** (d - 1) - cp.q_minus / (1 - cp.q_minus)) < 1e-10
    assert abs(lam * (1 - cp.q_minus) ** (d - 1) - cp.q_plus / (1 - cp.q_plus)) < 1e-10


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_p_plus_monotone(d):
    lc = float(lambda_c(d))
    ps = [fixed_points(lam, d).p_plus for lam in lc * np.linspace(1.001, 30, 60)]
    assert all(y >= x for x, y in zip(ps, ps[1:]))


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_near_critical_limit(d):
    cp = fixed_points(float(lambda_c(d)) + 1e-6, d)
    for p in (cp.p_minus, cp.p_star, cp.p_plus):
        assert abs(p - 1 / d) < 1e-3


def test_lambda_half_values():
    assert lambda_half(6) == pytest.approx(1.23105, abs=1e-3)
    l4, l5 = lambda_half(4), lambda_half(5)
    assert l4 >= 2.015387 - 1e-6 and abs(l4 - 2.015387) < 2e-3
    assert l5 >= 1.45641 - 1e-6 and abs(l5 - 1.45641) < 2e-3


@pytest.mark.parametrize("d", [3, 4, 5, 6, 10])
def test_lambda_half_cross_check(d):
    # the equation is exactly p_plus = 1/2 written in terms of lam
    assert lambda_half(d) == pytest.approx(lambda_half_from_marginal(d), rel=1e-8)
    assert fixed_points(lambda_half(d), d).p_plus == pytest.approx(0.5, abs=1e-9)


def test_finite_tree_examples():
    for mode in ("complete", "reduced"):
        assert finite_tree_marginal(1, 2.5, 3, mode) == pytest.approx(2.5 / 3.5)
    assert finite_tree_marginal(2, 1, 3, "complete") == pytest.approx(1 / 9)
    cp = fixed_points(5, 3)
    q = finite_tree_marginal(2 * 200 + 1, 5, 3, "reduced")
    assert abs(q - cp.q_plus) < 1e-8


def test_finite_tree_star_enumeration():
    # complete tree with two levels is the star K_{1,3}: Z = lam + (1+lam)^3
    for lam in (0.5, 2.0, 7.0):
        assert finite_tree_marginal(2, lam, 3) == pytest.approx(lam / (lam + (1 + lam) ** 3), rel=1e-14)


@pytest.mark.parametrize("d,lam", [(3, 5.0), (4, 3.0), (5, 2.0)])
def test_finite_tree_parity_brackets(d, lam):
    cp = fixed_points(lam, d)
    odd = [finite_tree_marginal(2 * k + 1, lam, d) for k in range(1, 150)]
    even = [finite_tree_marginal(2 * k, lam, d) for k in range(1, 150)]
    # one parity class decreases to p+, the other increases to p-
    assert all(y <= x + 1e-15 for x, y in zip(odd, odd[1:]))
    assert all(y >= x - 1e-15 for x, y in zip(even, even[1:]))
    assert min(odd) >= cp.p_plus - 1e-12 and max(even) <= cp.p_minus + 1e-12
    assert odd[-1] - cp.p_plus < 1e-6 and cp.p_minus - even[-1] < 1e-6


def test_contraction_examples():
    cp = fixed_points(5, 3)
    assert abs(contraction_factor(5, 3) - cp.q_plus * cp.q_minus) < 1e-10
    assert contraction_factor(2, 4) <= 1 / 9 + 1e-12
    for lam in (4.1, 4.5, 6, 10, 100):
        cp = fixed_points(lam, 3)
        assert abs(contraction_factor(lam, 3) - cp.q_plus * cp.q_minus) < 1e-10
    with pytest.raises(ValueError):
        contraction_factor(4, 3)


@given(above)
def test_contraction_property(args):
    d, lam = args
    cp = fixed_points(lam, d)
    gam = contraction_factor(lam, d)
    assert abs(gam - cp.q_plus * cp.q_minus) < 1e-10
    assert gam <= 1 / (d - 1) ** 2 + 1e-12


@given(above)
def test_contraction_is_two_level_derivative(args):
    d, lam = args
    cp = fixed_points(lam, d)
    h = 1e-6
    g2 = lambda q: tree_map(tree_map(q, lam, d), lam, d)  # noqa: E731
    fd = (g2(cp.q_plus + h) - g2(cp.q_plus - h)) / (2 * h)
    # the two-level map sees (Delta-1)^2 grandchildren, each with derivative gamma
    assert fd / (d - 1) ** 2 == pytest.approx(contraction_factor(lam, d), rel=1e-5, abs=1e-9)
