"""Reflection words, traces and Goldman's discriminant.

An element of SU(2,1) is regular elliptic when f(trace) < 0 and loxodromic
when f(trace) > 0, where f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27 vanishes on
a deltoid.  The trace of W_B = I1 I2 I3 runs over the upper half of a circle
F as t goes from -1 to 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BadIndex, Inadmissible, OutOfRange
from .hermitian import reflection
from .triangle import admissible, build_gram, epsilon_of_t

BOUNDARY_TOL = 1e-9

WORD_A = (3, 2, 1, 2)
WORD_B = (1, 2, 3)


def reflections(r1, r2, r3, t):
    """The reflections I1, I2, I3 in the sides, in the basis of polar vectors."""
    G = build_gram(r1, r2, r3, t)
    basis = np.eye(3, dtype=complex)
    return tuple(reflection(basis[i], G) for i in range(3)), G


def word(letters, I1, I2, I3) -> np.ndarray:
    """Product of the reflections in the written order."""
    letters = tuple(letters)
    if not letters:
        raise BadIndex("a word needs at least one letter")
    gens = {1: I1, 2: I2, 3: I3}
    out = np.eye(3, dtype=complex)
    for k in letters:
        if k not in gens:
            raise BadIndex(f"reflection index must be 1, 2 or 3, got {k!r}")
        out = out @ gens[k]
    return out


def goldman_f(z: complex) -> float:
    z = complex(z)
    a2 = z.real * z.real + z.imag * z.imag
    return a2 * a2 - 8 * (z**3).real + 18 * a2 - 27


class TraceKind(Enum):
    REGULAR_ELLIPTIC = "RegularElliptic"
    LOXODROMIC = "Loxodromic"
    BOUNDARY = "Boundary"


@dataclass(frozen=True)
class TraceClassification:
    kind: TraceKind
    f_value: float
    trace: complex


def classify_trace(z: complex, tol: float = BOUNDARY_TOL) -> TraceClassification:
    if tol <= 0:
        raise ValueError("tol must be positive")
    f = goldman_f(z)
    if f < -tol:
        kind = TraceKind.REGULAR_ELLIPTIC
    elif f > tol:
        kind = TraceKind.LOXODROMIC
    else:
        kind = TraceKind.BOUNDARY
    return TraceClassification(kind, f, complex(z))


def trace_WB(r1, r2, r3, t) -> complex:
    """8 r1 r2 r3 eps - 4 (r1^2 + r2^2 + r3^2) + 3."""
    if not admissible(r1, r2, r3, t, 1e-12):
        raise Inadmissible(f"(r, t) = ({r1}, {r2}, {r3}, {t}) violates the admissibility inequality")
    return 8 * r1 * r2 * r3 * epsilon_of_t(t) - 4 * (r1 * r1 + r2 * r2 + r3 * r3) + 3


def tance_WA_axes(r1, r2, r3, t) -> float:
    """ta(I2 p1, p3) = 4 r1^2 r2^2 - 4 r1 r2 r3 t + r3^2; W_A is regular elliptic when it is < 1."""
    return 4 * r1 * r1 * r2 * r2 - 4 * r1 * r2 * r3 * t + r3 * r3


@dataclass(frozen=True)
class CircleF:
    center_x: float
    radius: float

    def contains(self, z: complex, tol: float = 1e-10) -> bool:
        return abs(abs(complex(z) - self.center_x) - self.radius) <= tol


def circle_of(r1, r2, r3) -> CircleF:
    return CircleF(3 - 4 * (r1 * r1 + r2 * r2 + r3 * r3), 8 * r1 * r2 * r3)


def t_of_x(x, r1, r2, r3) -> float:
    t = (x + 4 * (r1 * r1 + r2 * r2 + r3 * r3) - 3) / (8 * r1 * r2 * r3)
    if abs(t) > 1 + 1e-9:
        raise OutOfRange(f"x = {x!r} is not the real part of a point of the circle (t = {t!r})")
    return max(-1.0, min(1.0, t))


def x_of_t(t, r1, r2, r3) -> float:
    if abs(t) > 1 + 1e-9:
        raise OutOfRange(f"|t| must be at most 1, got {t!r}")
    return 8 * r1 * r2 * r3 * t - 4 * (r1 * r1 + r2 * r2 + r3 * r3) + 3


def deltoid_point(theta: float) -> complex:
    return 2 * cmath.exp(1j * theta) + cmath.exp(-2j * theta)


def deltoid_boundary(samples: int) -> list[complex]:
    """``samples`` points 2 e^{i theta} + e^{-2 i theta}, theta uniform on [0, 2 pi)."""
    if samples < 3:
        raise ValueError("need at least 3 samples")
    return [deltoid_point(2 * math.pi * k / samples) for k in range(samples)]


def normalize_to_SU(M) -> np.ndarray:
    """Rescale a unitary-up-to-scalar matrix to determinant 1.

    Uses the principal cube root of the determinant.  The other two choices
    multiply the trace by a cube root of unity, which leaves goldman_f
    unchanged, so the classification does not depend on the choice.
    """
    M = np.asarray(M, dtype=complex)
    d = complex(np.linalg.det(M))
    if abs(d) < 1e-300:
        raise ValueError("singular matrix")
    return M / d ** (1.0 / 3.0)
