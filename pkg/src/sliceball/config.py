"""Run configuration shared by the verification suites and the CLI."""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_SEED = 7
DEFAULT_SAMPLES = 1000
DEFAULT_TRUNCATION = 64
DEFAULT_ATOL = 1e-12
DEFAULT_RTOL = 1e-9
DEFAULT_BOUNDARY_MARGIN = 1e-3
DEFAULT_DELTA_TOL = 1e-10


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    truncation: int = DEFAULT_TRUNCATION
    atol: float = DEFAULT_ATOL
    rtol: float = DEFAULT_RTOL
    boundary_margin: float = DEFAULT_BOUNDARY_MARGIN
    delta_tol: float = DEFAULT_DELTA_TOL

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not 0.0 < self.boundary_margin < 1.0:
            raise ValueError("boundary_margin must lie in (0, 1)")
        if self.atol <= 0.0 or self.rtol <= 0.0:
            raise ValueError("atol and rtol must be positive")
        if self.truncation < 1:
            raise ValueError("truncation must be at least 1")
        if self.delta_tol <= 0.0:
            raise ValueError("delta_tol must be positive")
