"""Serializable parameter records for every CLI experiment.

A record is built from its defaults, then a JSON config file, then explicit
command-line flags, so a saved config replays the same run.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path


@dataclass
class ThresholdsConfig:
    delta: int = 3
    step: float = 0.01
    xtol: float = 1e-12


@dataclass
class FixedPointsConfig:
    delta: int = 3
    lam: str = "5"


@dataclass
class ExactZConfig:
    graph: str = ""
    lam: str = "1"


@dataclass
class ClassMeasuresConfig:
    graph: str = ""
    lam: str = "1"
    slack: str = "1/5"


@dataclass
class BlowupCheckConfig:
    k: int = 2
    trials: int = 20
    seed: int = 0
    max_vertices: int = 8
    edge_prob: float = 0.4
    lams: list[str] = field(default_factory=lambda: ["1/2", "1", "3"])


@dataclass
class SurfaceScanConfig:
    delta: int = 3
    lam: float = 5.0
    resolution: int = 50
    alpha: float | None = None
    beta: float | None = None


@dataclass
class VerifyConditionConfig:
    delta: int = 3
    lam: float = 5.0
    n_starts: int = 200
    seed: int = 0
    alpha: float | None = None
    beta: float | None = None
    point_tol: float = 1e-6
    value_tol: float = 1e-9


@dataclass
class PhaseScanConfig:
    delta: int = 3
    lams: list[float] = field(default_factory=lambda: [3.9, 4.0, 4.1, 5.0, 10.0])
    slack: float = 0.01
    n_starts: int = 60
    seed: int = 0


@dataclass
class CertifyConfig:
    claim: str = ""
    margin: str = "1/100"
    depth: int = 24
    max_cells: int = 5_000_000


@dataclass
class GlauberConfig:
    graph: str = ""
    n: int = 12
    delta: int = 3
    graph_seed: int = 0
    lam: float = 6.0
    steps: int = 1_000_000
    burn_in: int = 0
    stride: int | None = None
    seed: int = 0
    start: str = "side1-full"
    band: float = 0.2


@dataclass
class GenGraphConfig:
    n: int = 12
    delta: int = 3
    seed: int = 0


CONFIGS = {
    "thresholds": ThresholdsConfig,
    "fixed-points": FixedPointsConfig,
    "exact-z": ExactZConfig,
    "class-measures": ClassMeasuresConfig,
    "blowup-check": BlowupCheckConfig,
    "surface-scan": SurfaceScanConfig,
    "verify-condition": VerifyConditionConfig,
    "phase-scan": PhaseScanConfig,
    "certify": CertifyConfig,
    "glauber": GlauberConfig,
    "gen-graph": GenGraphConfig,
}


def build_config(command: str, file_values: dict | None = None, overrides: dict | None = None):
    """Defaults, then ``file_values``, then non-None ``overrides``; unknown keys are rejected."""
    cls = CONFIGS[command]
    names = {f.name for f in fields(cls)}
    values: dict = {}
    for source in (file_values or {}, {k: v for k, v in (overrides or {}).items() if v is not None}):
        unknown = set(source) - names
        if unknown:
            raise ValueError(f"unknown {command} parameters: {sorted(unknown)}")
        values.update(source)
    return cls(**values)


def load_config_file(path) -> dict:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def config_to_dict(cfg) -> dict:
    return asdict(cfg)
