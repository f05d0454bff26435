"""Type A / type B classification along the canonical path.

W_A turns regular elliptic exactly after t_WA (closed form).  For W_B the
sign of h(t) = f(trace_WB(t)) is scanned on a uniform grid over [-1, t_max]
and the first sign change is refined by bisection.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import StartNotLoxodromic
from .isometry import goldman_f, trace_WB
from .triangle import INF, TriangleAngles, thresholds

DEFAULT_GRID = 10_000
DEFAULT_TOL = 1e-9
ELLIPTIC_MARGIN = 1e-9  # h below -margin counts as regular elliptic on the grid
THREADS_ENV = "CHTRIANGLES_THREADS"


def h(r1, r2, r3, t) -> float:
    return goldman_f(trace_WB(r1, r2, r3, t))


def onset_WA(r1, r2, r3) -> float | None:
    th = thresholds(r1, r2, r3)
    return th.t_WA if th.t_WA < th.t_max - 1e-12 else None


def onset_WB(r1, r2, r3, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> float | None:
    """First t in [-1, t_max] where W_B is regular elliptic, to within ``tol``."""
    if grid < 1000:
        raise ValueError("grid must be at least 1000")
    if tol <= 0:
        raise ValueError("tol must be positive")
    t_max = thresholds(r1, r2, r3).t_max
    if t_max <= -1:
        return None
    if h(r1, r2, r3, -1.0) <= 0:
        raise StartNotLoxodromic("h(-1) <= 0: W_B is not loxodromic at the start of the path")
    ts = np.linspace(-1.0, t_max, grid + 1)
    for k in np.flatnonzero(_h_grid(r1, r2, r3, ts) < -ELLIPTIC_MARGIN):
        # confirm the grid hit with the scalar formula before refining
        if k > 0 and h(r1, r2, r3, float(ts[k])) < -ELLIPTIC_MARGIN:
            return _bisect(r1, r2, r3, float(ts[k - 1]), float(ts[k]), tol)
    return None


def _h_grid(r1, r2, r3, ts: np.ndarray) -> np.ndarray:
    """h over an array of parameters (same formula as ``h``, vectorised)."""
    p8 = 8 * r1 * r2 * r3
    x = p8 * ts - 4 * (r1 * r1 + r2 * r2 + r3 * r3) + 3
    y = p8 * np.sqrt(np.clip(1.0 - ts * ts, 0.0, None))
    a2 = x * x + y * y
    re_cube = x * x * x - 3 * x * y * y
    return a2 * a2 - 8 * re_cube + 18 * a2 - 27


def _bisect(r1, r2, r3, a, b, tol):
    # invariant: h(a) >= -margin (not yet elliptic), h(b) < -margin
    while b - a > tol:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        if h(r1, r2, r3, m) < -ELLIPTIC_MARGIN:
            b = m
        else:
            a = m
    return 0.5 * (a + b)


@dataclass(frozen=True)
class OnsetReport:
    t_WA_onset: float | None
    t_WB_onset: float | None
    t_max: float
    bracket_width: float


class Verdict(Enum):
    A = "A"
    B = "B"
    RIGID = "Rigid"
    NEITHER = "NeitherElliptic"
    TIE = "Tie"


@dataclass(frozen=True)
class TypeVerdict:
    verdict: Verdict
    report: OnsetReport
    gap: float | None = None  # t_WB_onset - t_WA_onset when both exist


def classify_radii(r1, r2, r3, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> TypeVerdict:
    t_max = thresholds(r1, r2, r3).t_max
    if t_max <= -1 + 1e-12:
        return TypeVerdict(Verdict.RIGID, OnsetReport(None, None, t_max, 0.0))
    a = onset_WA(r1, r2, r3)
    b = onset_WB(r1, r2, r3, grid, tol)
    report = OnsetReport(a, b, t_max, tol)
    if a is None and b is None:
        return TypeVerdict(Verdict.NEITHER, report)
    if b is None:
        return TypeVerdict(Verdict.A, report)
    if a is None:
        return TypeVerdict(Verdict.B, report)
    gap = b - a
    if abs(gap) <= tol:
        return TypeVerdict(Verdict.TIE, report, gap)
    return TypeVerdict(Verdict.A if gap > 0 else Verdict.B, report, gap)


def classify_triple(angles: TriangleAngles, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> TypeVerdict:
    return classify_radii(*angles.radii(), grid=grid, tol=tol)


@dataclass(frozen=True)
class ScanRow:
    angles: TriangleAngles
    result: TypeVerdict


def triples(n_max: int, include_infinity: bool = False):
    """Sorted triples 3 <= n1 <= n2 <= n3 <= n_max, optionally with infinite slots, in lexicographic order."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    values = list(range(3, n_max + 1)) + ([INF] if include_infinity else [])
    for combo in itertools.combinations_with_replacement(values, 3):
        yield TriangleAngles(*combo)


def _row(args):
    angles, grid, tol = args
    return ScanRow(angles, classify_triple(angles, grid, tol))


def worker_count() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan(n_max: int, include_infinity: bool = False, grid: int = DEFAULT_GRID,
         tol: float = DEFAULT_TOL, workers: int | None = None) -> list[ScanRow]:
    jobs = [(a, grid, tol) for a in triples(n_max, include_infinity)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) < 64:
        return [_row(j) for j in jobs]
    chunk = max(1, math.ceil(len(jobs) / (4 * workers)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_row, jobs, chunksize=chunk))

