"""Interval certification of polynomial sign claims over semialgebraic regions."""
from .bnb import CertificateReport, RegionSpec, Status, certify_sign
from .claims import DEFAULT_DEPTH, DEFAULT_MARGIN, REGISTRY, list_claims, regions, run_claim
from .derivations import derive_all, exact_identities, oracle_relative_errors, transcribed, transcription_mismatches
from .interval import CenteredForm, IntervalArray, enclose, natural_enclosure
from .poly import D_POLY, PolynomialExpr, RadicalFraction, radical_split, radical_symbols

__all__ = [
    "CertificateReport",
    "CenteredForm",
    "D_POLY",
    "DEFAULT_DEPTH",
    "DEFAULT_MARGIN",
    "IntervalArray",
    "PolynomialExpr",
    "REGISTRY",
    "RadicalFraction",
    "RegionSpec",
    "Status",
    "certify_sign",
    "derive_all",
    "enclose",
    "exact_identities",
    "list_claims",
    "natural_enclosure",
    "oracle_relative_errors",
    "radical_split",
    "radical_symbols",
    "regions",
    "run_claim",
    "transcribed",
    "transcription_mismatches",
]
