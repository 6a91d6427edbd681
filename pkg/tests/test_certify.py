from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hardcore.certify import (
    D_POLY,
    CenteredForm,
    PolynomialExpr,
    RadicalFraction,
    RegionSpec,
    Status,
    certify_sign,
    derive_all,
    enclose,
    exact_identities,
    list_claims,
    natural_enclosure,
    oracle_relative_errors,
    radical_split,
    radical_symbols,
    regions,
    run_claim,
    transcribed,
    transcription_mismatches,
)
from hardcore.certify.claims import REGISTRY
from hardcore.certify.derivations import sample_region_points
from hardcore.certify.interval import IntervalArray, float_interval

VARS = ("alpha", "beta", "gamma", "delta")

monomials = st.tuples(*(st.integers(0, 3) for _ in range(4)))
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=64)
polys = st.lists(st.tuples(coeffs, monomials), min_size=0, max_size=8).map(lambda t: PolynomialExpr(tuple(t)))


@st.composite
def boxes(draw):
    lo, hi = [], []
    for _ in range(4):
        a = draw(st.floats(-2, 2))
        w = draw(st.floats(0, 1.5))
        lo.append(a)
        hi.append(a + w)
    return np.array([lo]), np.array([hi])


# ------------------------------------------------------------ polynomials


def test_canonical_form():
    p = PolynomialExpr(((Fraction(1), (1, 0, 0, 0)), (Fraction(-1), (1, 0, 0, 0)), (Fraction(2), (0, 0, 0, 0))))
    assert p.terms == ((Fraction(2), (0, 0, 0, 0)),)
    q = PolynomialExpr.parse("alpha^2 - 2*alpha*beta + beta**2")
    assert q == (PolynomialExpr.variable("alpha") - PolynomialExpr.variable("beta")) ** 2
    assert [e for _, e in q.terms] == sorted(e for _, e in q.terms)
    with pytest.raises(ValueError):
        PolynomialExpr.parse("alpha + x")


@given(polys, polys)
def test_arithmetic_matches_evaluation(p, q):
    pt = (Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4), Fraction(1, 9))
    assert (p + q).evaluate_exact(pt) == p.evaluate_exact(pt) + q.evaluate_exact(pt)
    assert (p * q).evaluate_exact(pt) == p.evaluate_exact(pt) * q.evaluate_exact(pt)
    assert (p - q).evaluate_exact(pt) == p.evaluate_exact(pt) - q.evaluate_exact(pt)
    assert all(c != 0 for c, _ in (p * q).terms)
    assert PolynomialExpr.parse(str(p)) == p


@given(polys)
def test_float_evaluation(p):
    pt = (0.3, -0.7, 1.1, 0.25)
    exact = p.evaluate_exact(pt)
    scale = sum(abs(c) for c, _ in p.terms) * 2
    assert abs(p.evaluate(*pt) - float(exact)) <= 1e-13 * (scale + 1)


def test_no_radical_split():
    s = radical_symbols()
    expr = s["alpha"] * s["beta"] - 3 * s["gamma"]
    p1, p2 = radical_split(expr)
    assert p2.is_zero and p1 == PolynomialExpr.parse("alpha*beta - 3*gamma")


def test_sqrt_squared_is_d():
    s = radical_symbols()
    p1, p2 = radical_split(s["sqrt_D"] * s["sqrt_D"])
    assert p1 == D_POLY and p2.is_zero


def test_split_needs_polynomial_form():
    s = radical_symbols()
    with pytest.raises(ValueError):
        radical_split(1 / (1 + s["alpha"]))
    p1, p2 = radical_split(s["sqrt_D"] / (1 + s["alpha"]), clearing=PolynomialExpr.parse("1 + alpha"))
    assert p1.is_zero and p2 == PolynomialExpr.constant(1)


@st.composite
def radical_exprs(draw, depth=3):
    """A random +,-,* tree over the variables, sqrt(D) and a small constant, with its leaf index tree."""
    s = radical_symbols()
    c = draw(st.integers(-3, 3))
    leaves = [s[k] for k in (*VARS, "sqrt_D")] + [RadicalFraction(c)]

    def build(d):
        if d == 0 or draw(st.booleans()):
            i = draw(st.integers(0, len(leaves) - 1))
            return leaves[i], ("leaf", i)
        op = draw(st.sampled_from(["+", "-", "*"]))
        (x, tx), (y, ty) = build(d - 1), build(d - 1)
        return {"+": x + y, "-": x - y, "*": x * y}[op], (op, tx, ty)

    expr, tree = build(depth)
    return expr, tree, c


def _eval_tree(tree, vals):
    if tree[0] == "leaf":
        return vals[tree[1]]
    x, y = _eval_tree(tree[1], vals), _eval_tree(tree[2], vals)
    return {"+": x + y, "-": x - y, "*": x * y}[tree[0]]


@given(radical_exprs())
def test_split_numeric_consistency(data):
    expr, tree, c = data
    # divide by a polynomial that never vanishes on the sample and clear it again
    den = PolynomialExpr.parse("1 + alpha^2 + gamma")
    p1, p2 = radical_split(expr / RadicalFraction(den.to_ring()), clearing=den)
    pts = sample_region_points(100, seed=0)
    a, b, g, d = pts.T
    sq = np.sqrt((1 - a - b) ** 2 + 4 * (a - g) * (b - d))
    direct = _eval_tree(tree, [a, b, g, d, sq, np.full_like(a, c)])
    split = p1.evaluate(a, b, g, d) + p2.evaluate(a, b, g, d) * sq
    scale = np.maximum(np.abs(direct), 1.0)
    assert np.max(np.abs(direct - split) / scale) < 1e-10


def test_transcriptions_match_derivations():
    assert transcription_mismatches() == []
    derived = derive_all()
    assert derived["W31"] == transcribed("W31") and derived["W32"] == transcribed("W32")
    assert derived["TP1"] == transcribed("TP1")


def test_oracle_agreement():
    errs = oracle_relative_errors(n=100, seed=0)
    assert set(errs) == {"W3", "W4", "P1", "P21", "P5", "P7", "s1", "qwer"}
    assert max(errs.values()) < 1e-9


def test_exact_identities_hold():
    checks = exact_identities()
    assert {c.name for c in checks} == {"W5", "W6", "P2", "P5"}
    assert all(c.holds for c in checks)


def test_identity_detects_perturbation():
    a, b, g, d = (PolynomialExpr.variable(v) for v in VARS)
    bad = transcribed("P21") + a * b * g * d
    lhs = transcribed("P11") ** 2 - D_POLY * transcribed("P12") ** 2
    assert lhs != -((b - d) ** 2) * (a - g) ** 3 * bad


# ------------------------------------------------------------ intervals


def test_float_interval_brackets():
    for q in (Fraction(1, 3), Fraction(-2, 7), Fraction(1, 10**30), Fraction(5)):
        lo, hi = float_interval(q)
        assert Fraction(lo) <= q <= Fraction(hi)


def test_interval_power_even():
    x = IntervalArray(np.array([-1.0]), np.array([2.0]))
    sq = x**2
    assert sq.lo[0] == 0.0 and sq.hi[0] >= 4.0


@given(polys, boxes(), st.lists(st.tuples(*(st.floats(0, 1) for _ in range(4))), min_size=10, max_size=10))
def test_enclosure_contains_values(p, box, ts):
    lo, hi = box
    nat = natural_enclosure(p, lo, hi)
    for t in ts:
        pt = [Fraction(float(lo[0, i] + t[i] * (hi[0, i] - lo[0, i]))) for i in range(4)]
        pt = [min(max(x, Fraction(float(lo[0, i]))), Fraction(float(hi[0, i]))) for i, x in enumerate(pt)]
        v = p.evaluate_exact(pt)
        assert Fraction(float(nat.lo[0])) <= v <= Fraction(float(nat.hi[0]))


@given(polys, boxes(), st.lists(st.tuples(*(st.floats(0, 1) for _ in range(4))), min_size=10, max_size=10))
def test_centered_enclosure_contains_values(p, box, ts):
    lo, hi = box
    enc = enclose(CenteredForm(p), lo, hi)
    for t in ts:
        pt = [Fraction(float(lo[0, i] + t[i] * (hi[0, i] - lo[0, i]))) for i in range(4)]
        pt = [min(max(x, Fraction(float(lo[0, i]))), Fraction(float(hi[0, i]))) for i, x in enumerate(pt)]
        v = p.evaluate_exact(pt)
        assert Fraction(float(enc.lo[0])) <= v <= Fraction(float(enc.hi[0]))


def test_enclosure_random_pairs():
    # 1000 random (polynomial, box) pairs drawn with numpy, 10 points each
    rng = np.random.default_rng(0)
    for _ in range(1000):
        k = int(rng.integers(1, 7))
        terms = tuple(
            (Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 17))), tuple(int(x) for x in rng.integers(0, 4, 4)))
            for _ in range(k)
        )
        p = PolynomialExpr(terms)
        lo = rng.uniform(0, 1, (1, 4))
        hi = lo + rng.uniform(0, 0.5, (1, 4))
        enc = enclose(CenteredForm(p), lo, hi)
        for t in rng.uniform(0, 1, (10, 4)):
            pt = [Fraction(float(x)) for x in (lo[0] + t * (hi[0] - lo[0]))]
            pt = [min(max(x, Fraction(float(lo[0, i]))), Fraction(float(hi[0, i]))) for i, x in enumerate(pt)]
            v = p.evaluate_exact(pt)
            assert Fraction(float(enc.lo[0])) <= v <= Fraction(float(enc.hi[0]))


# -------------------------------------------------------- branch and bound


def test_positive_square_certified_at_depth_zero():
    p = PolynomialExpr.parse("alpha^2 + 1")
    rep = certify_sign(p, RegionSpec(((-3, 3), (0, 1), (0, 1), (0, 1))), "positive")
    assert rep.status is Status.CERTIFIED and rep.max_depth_reached == 0


def test_contradiction_falsified_with_exact_witness():
    rep = run_claim("control-lower-gamma")
    assert rep.status is Status.FALSIFIED
    region = regions()["lower"]
    assert region.contains_exact(rep.witness, rep.margin and Fraction(1, 100))
    assert PolynomialExpr.parse("gamma - alpha^2").evaluate_exact(rep.witness) <= 0


def test_negative_claim_falsified():
    rep = run_claim("control-P21-negative")
    assert rep.status is Status.FALSIFIED
    spec = REGISTRY["control-P21-negative"]
    assert spec.region().contains_exact(rep.witness, Fraction(1, 100))
    assert transcribed("P21").evaluate_exact(rep.witness) >= 0


def test_p21_certified_with_escalation():
    rep = run_claim("ccch-P21", max_depth=28)
    assert rep.status is Status.CERTIFIED
    assert rep.witness is None and rep.undecided_cells == 0


def test_claim_registry_contents():
    ids = {c["claim_id"] for c in list_claims()}
    for cid in ("cccf-P11", "cccf-P12", "ccch-P21", "ccccr-P51", "ccccr-P52", "s1", "ckkk-P71", "ckkk-P72",
                "TP1", "qwer", "ineqdelta3", "lzeros-W32", "lzeros-W42"):
        assert cid in ids
    with pytest.raises(KeyError):
        run_claim("no-such-claim")


@pytest.mark.parametrize("cid", ["lzeros-W32", "lzeros-W42", "cccf-P12", "qwer"])
def test_quick_claims_certified(cid):
    assert run_claim(cid).status is Status.CERTIFIED


def test_empty_region_reported():
    rep = certify_sign(PolynomialExpr.parse("-1"), regions()["R"], margin=Fraction(1, 2))
    assert rep.status is Status.CERTIFIED and rep.region_empty


def test_unbounded_box_rejected():
    with pytest.raises(ValueError):
        RegionSpec(((0, float("inf")), (0, 1), (0, 1), (0, 1)))
    with pytest.raises(ValueError):
        certify_sign(PolynomialExpr.parse("alpha"), RegionSpec.unit(), claim="zero")


def test_margin_semantics():
    # alpha > 0 with margin m means alpha >= m; the claim alpha - m/2 > 0 then holds
    p = PolynomialExpr.parse("alpha - 1/200")
    region = RegionSpec.unit([(PolynomialExpr.parse("alpha"), ">")])
    assert certify_sign(p, region, margin=Fraction(1, 100)).status is Status.CERTIFIED
    assert certify_sign(p, region, margin=Fraction(0)).status is Status.FALSIFIED


@given(
    st.lists(st.tuples(st.fractions(-4, 4, max_denominator=8), st.tuples(*(st.integers(0, 2) for _ in range(4)))),
             min_size=1, max_size=4),
    st.integers(0, 4),
)
def test_monotone_refinement(terms, extra):
    p = PolynomialExpr(tuple(terms))
    region = RegionSpec(((0, 1), (0, 1), (0, Fraction(1, 2)), (0, Fraction(1, 2))))
    shallow = certify_sign(p, region, max_depth=3, max_cells=20_000)
    deep = certify_sign(p, region, max_depth=3 + extra + 3, max_cells=20_000)
    decided = {Status.CERTIFIED, Status.FALSIFIED}
    if shallow.status in decided and deep.status in decided:
        assert shallow.status is deep.status
    for rep in (shallow, deep):
        if rep.status is Status.FALSIFIED:
            assert p.evaluate_exact(rep.witness) <= 0 and region.contains_exact(rep.witness)


def test_report_serializes():
    rep = run_claim("control-lower-gamma")
    d = rep.to_dict()
    assert d["status"] == "Falsified"
    assert set(d["witness"]) == set(VARS)
    assert all(Fraction(v) == w for v, w in zip(d["witness"].values(), rep.witness))
