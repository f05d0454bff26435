"""Closed-form trace and tance against explicit matrix products."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermitian import tance
from .isometry import WORD_B, reflections, tance_WA_axes, trace_WB, word
from .triangle import thresholds


@dataclass(frozen=True)
class OracleReport:
    samples: int
    seed: int
    trace_deviation: float
    tance_deviation: float
    worst_trace_at: tuple  # (r1, r2, r3, t)
    worst_tance_at: tuple

    @property
    def ok(self) -> bool:
        return self.trace_deviation < 1e-9 and self.tance_deviation < 1e-9


def random_parameters(rng: np.random.Generator) -> tuple[float, float, float, float]:
    """Admissible (r1, r2, r3, t) with r_i in [1/2, 1] and t uniform on [-1, t_max]."""
    while True:
        r = rng.uniform(0.5, 1.0, size=3)
        t_max = thresholds(*r).t_max
        if t_max > -1:
            return float(r[0]), float(r[1]), float(r[2]), float(rng.uniform(-1.0, t_max))


def deviations(r1, r2, r3, t) -> tuple[float, float]:
    (I1, I2, I3), G = reflections(r1, r2, r3, t)
    tr = complex(np.trace(word(WORD_B, I1, I2, I3)))
    d_trace = abs(tr - trace_WB(r1, r2, r3, t))
    e = np.eye(3, dtype=complex)
    d_tance = abs(tance(I2 @ e[0], e[2], G) - tance_WA_axes(r1, r2, r3, t))
    return d_trace, d_tance


def run_oracle(samples: int = 1000, seed: int = 0) -> OracleReport:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    worst_tr = worst_ta = (-1.0, ())
    for _ in range(samples):
        params = random_parameters(rng)
        d_tr, d_ta = deviations(*params)
        if d_tr > worst_tr[0]:
            worst_tr = (d_tr, params)
        if d_ta > worst_ta[0]:
            worst_ta = (d_ta, params)
    return OracleReport(samples, seed, worst_tr[0], worst_ta[0], worst_tr[1], worst_ta[1])
