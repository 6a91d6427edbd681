"""Registry of polynomial sign claims with their regions, and ``run_claim``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bnb import CertificateReport, RegionSpec, certify_sign
from .derivations import transcribed
from .poly import PolynomialExpr

DEFAULT_MARGIN = Fraction(1, 100)
DEFAULT_DEPTH = 24


def _p(text: str) -> PolynomialExpr:
    return PolynomialExpr.parse(text)


L1 = "(1-alpha)^2*delta + beta^2*(2*alpha-1-gamma)"
L2 = "(1-beta)^2*gamma + alpha^2*(2*beta-1-delta)"


@lru_cache(maxsize=None)
def regions() -> dict[str, RegionSpec]:
    """Named regions; every strict inequality is shrunk by the margin at certification time."""
    c = lambda text, rel: (_p(text), rel)  # noqa: E731
    simplex = RegionSpec.unit([c("alpha", ">"), c("beta", ">"), c("1-alpha-beta", ">")], "R")
    r3 = RegionSpec.unit([c("alpha", ">"), c("beta", ">"), c("1-alpha-beta-3*alpha*beta", ">")], "R3")
    con3 = RegionSpec.unit(
        [
            c("gamma", ">"),
            c("alpha-gamma", ">"),
            c("delta", ">"),
            c("beta-delta", ">"),
            c("1-2*beta+delta-gamma", ">"),
            c("1-2*alpha+gamma-delta", ">"),
        ],
        "con3",
    )
    lower = RegionSpec.unit(
        [
            c("gamma", ">"),
            c("alpha^2-gamma", ">"),
            c("delta", ">"),
            c("beta^2-delta", ">"),
            c(L1, "<"),
            c(L2, "<"),
        ],
        "lower",
    )
    upper = RegionSpec.unit(
        [
            c("gamma-alpha^2", ">"),
            c("alpha-gamma", ">"),
            c("delta-beta^2", ">"),
            c("beta-delta", ">"),
            c(L1, ">"),
            c(L2, ">"),
        ],
        "upper",
    )
    half = RegionSpec(((0, Fraction(1, 2)), (0, Fraction(1, 2)), (0, 1), (0, 1)), (), "alpha,beta<=1/2")
    curve = RegionSpec.unit(
        [
            c("(1-alpha-beta)^2 - alpha*beta", "="),
            c("alpha-1/2", ">"),
            c("1-alpha", ">"),
            c("beta", ">"),
            c("1-beta", ">"),
        ],
        "R3'",
    )
    return {"R": simplex, "R3": r3, "con3": con3, "lower": lower, "upper": upper, "half": half, "R3'": curve}


def _ineq_system(a_numerator: str) -> tuple[PolynomialExpr, PolynomialExpr]:
    """Polynomial form of 4 delta^2 X^2 > A Y^2 (given Y > 0) with X, A, Y cleared of denominators.

    X = Xn/(1-beta)^2, A = An/beta and Y = 18 delta(beta-delta) - 3 beta X + delta X = Yn/(1-beta)^2,
    so on 0 < beta < 1 the claim is 4 delta^2 Xn^2 beta - An Yn^2 > 0 and the side condition is Yn > 0.
    """
    xn = "((1-2*alpha)*(1-beta)^2 + alpha^2*(1-2*beta+delta))"
    yn = f"(18*delta*(beta-delta)*(1-beta)^2 + (delta-3*beta)*{xn})"
    claim = _p(f"4*delta^2*{xn}^2*beta - ({a_numerator})*{yn}^2")
    return claim, _p(yn)


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    polynomial: str
    sign: str
    region_names: tuple[str, ...]
    statement: str
    expected: str = "Certified"
    extra: tuple[tuple[PolynomialExpr, str], ...] = ()

    def poly(self) -> PolynomialExpr:
        if self.polynomial.startswith("ineqdelta3"):
            num = "3*beta-2*delta" if self.polynomial == "ineqdelta3" else "2*beta-2*delta"
            return _ineq_system(num)[0]
        if self.polynomial == "gamma-alpha^2":
            return _p("gamma-alpha^2")
        return transcribed(self.polynomial)

    def region(self) -> RegionSpec:
        reg = regions()
        out = reg[self.region_names[0]]
        for name in self.region_names[1:]:
            out = out & reg[name]
        if self.polynomial.startswith("ineqdelta3"):
            side = _ineq_system("0")[1]
            out = out & RegionSpec.unit([(side, ">")], "Y>0")
        return out


def _claims() -> list[ClaimSpec]:
    return [
        ClaimSpec("lzeros-W32", "W32", "positive", ("R", "con3"), "W32 > 0 on R and con3"),
        ClaimSpec("lzeros-W42", "W42", "positive", ("R", "con3"), "W42 > 0 on R and con3"),
        ClaimSpec("cccf-P11", "P11", "positive", ("R", "con3"), "P11 > 0 on R and con3"),
        ClaimSpec("cccf-P12", "P12", "negative", ("R", "con3"), "P12 < 0 on R and con3"),
        ClaimSpec("ccch-P21", "P21", "positive", ("R", "con3"), "P21 > 0 on R and con3"),
        ClaimSpec("ccccr-P51", "P51", "negative", ("R", "con3"), "P51 < 0 on R and con3"),
        ClaimSpec("ccccr-P52", "P52", "positive", ("R", "con3"), "P52 > 0 on R and con3"),
        ClaimSpec("s1", "s1", "positive", ("R3", "lower"), "s1 > 0 on R3 and the lower region"),
        ClaimSpec("ckkk-P71", "P71", "positive", ("R3", "con3"), "P71 > 0 on R3 and con3"),
        ClaimSpec("ckkk-P72", "P72", "negative", ("R3", "con3"), "P72 < 0 on R3 and con3"),
        ClaimSpec("TP1", "TP1", "positive", ("R3", "lower"), "P71^2 - D P72^2 > 0 on R3 and the lower region"),
        ClaimSpec(
            "qwer", "qwer", "positive", ("R", "half", "upper"),
            "D - (-(1-alpha-beta)^2 - alpha - beta + gamma + delta)^2 > 0 on R, alpha, beta <= 1/2, upper region",
        ),
        ClaimSpec(
            "ineqdelta3", "ineqdelta3", "positive", ("R3'", "con3", "upper"),
            "4 delta^2 X^2 > A Y^2 with A = (3beta-2delta)/beta whenever Y > 0, on R3', con3 and the upper region",
        ),
        ClaimSpec(
            "ineqdelta3-alt", "ineqdelta3-alt", "positive", ("R3'", "con3", "upper"),
            "same system with the weaker A = (2beta-2delta)/beta",
        ),
        ClaimSpec(
            "control-lower-gamma", "gamma-alpha^2", "positive", ("lower",),
            "deliberately false: gamma - alpha^2 > 0 on the lower region", expected="Falsified",
        ),
        ClaimSpec(
            "control-P21-negative", "P21", "negative", ("R", "con3"),
            "deliberately false: P21 < 0 on R and con3", expected="Falsified",
        ),
    ]


REGISTRY: dict[str, ClaimSpec] = {c.claim_id: c for c in _claims()}


def list_claims() -> list[dict]:
    return [
        {
            "claim_id": c.claim_id,
            "sign": c.sign,
            "region": " & ".join(c.region_names),
            "statement": c.statement,
            "expected": c.expected,
        }
        for c in REGISTRY.values()
    ]


def run_claim(
    claim_id: str, margin=DEFAULT_MARGIN, max_depth: int = DEFAULT_DEPTH, max_cells: int = 5_000_000
) -> CertificateReport:
    if claim_id not in REGISTRY:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}")
    spec = REGISTRY[claim_id]
    return certify_sign(
        spec.poly(), spec.region(), spec.sign, margin=margin, max_depth=max_depth, max_cells=max_cells, label=claim_id
    )
