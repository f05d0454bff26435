"""Linear algebra over a Hermitian form of signature (+, +, -) on C^3.

Vectors are length-3 complex numpy arrays.  The form in Gram coordinates is
``<u, v> = u^H G v`` (conjugate-linear in the first slot).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateGram, IsotropicArgument, NotPolar

RESULT_TOL = 1e-10
DEGENERACY_TOL = 1e-12


class HermitianMatrix:
    """A 3x3 Hermitian matrix, symmetrised on construction."""

    __slots__ = ("_a",)

    def __init__(self, entries, check_tol: float = 1e-12):
        a = np.array(entries, dtype=complex).reshape(3, 3)
        if np.max(np.abs(a - a.conj().T)) > check_tol:
            raise DegenerateGram("matrix is not Hermitian")
        # keep the upper triangle, mirror it, and force a real diagonal
        a = np.triu(a, 1) + np.triu(a, 1).conj().T + np.diag(np.real(np.diag(a)))
        a.setflags(write=False)
        self._a = a

    @classmethod
    def from_upper(cls, diag, a12, a13, a23) -> "HermitianMatrix":
        d1, d2, d3 = diag
        return cls([[d1, a12, a13],
                    [np.conj(a12), d2, a23],
                    [np.conj(a13), np.conj(a23), d3]])

    @classmethod
    def standard(cls) -> "HermitianMatrix":
        return cls(np.diag([1.0, 1.0, -1.0]))

    @property
    def array(self) -> np.ndarray:
        return self._a

    def __array__(self, dtype=None, copy=None):
        return self._a if dtype is None else self._a.astype(dtype)

    def __getitem__(self, idx):
        return self._a[idx]

    def __repr__(self):
        return f"HermitianMatrix({self._a.tolist()!r})"


def vec(*components) -> np.ndarray:
    v = np.array(components, dtype=complex).reshape(3)
    if not np.any(v):
        raise ValueError("the zero vector does not represent a point")
    return v


def inner(u, v, G: HermitianMatrix) -> complex:
    return complex(np.conj(u) @ G.array @ v)


def norm_sq(p, G: HermitianMatrix) -> float:
    return inner(p, p, G).real


def tance(p, q, G: HermitianMatrix) -> float:
    pp, qq = norm_sq(p, G), norm_sq(q, G)
    if abs(pp) <= DEGENERACY_TOL or abs(qq) <= DEGENERACY_TOL:
        raise IsotropicArgument("tance is undefined for isotropic points")
    pq = inner(p, q, G)
    return (pq * pq.conjugate()).real / (pp * qq)


class PointKind(Enum):
    NEGATIVE = "Negative"
    ISOTROPIC = "Isotropic"
    POSITIVE = "Positive"


@dataclass(frozen=True)
class PointClass:
    kind: PointKind
    value: float


def classify_point(p, G: HermitianMatrix, tol: float = DEGENERACY_TOL) -> PointClass:
    if tol <= 0:
        raise ValueError("tol must be positive")
    v = norm_sq(p, G)
    if v < -tol:
        kind = PointKind.NEGATIVE
    elif abs(v) <= tol:
        kind = PointKind.ISOTROPIC
    else:
        kind = PointKind.POSITIVE
    return PointClass(kind, v)


class Position(Enum):
    CONCURRENT = "Concurrent"
    ASYMPTOTIC = "Asymptotic"
    ULTRAPARALLEL = "Ultraparallel"


@dataclass(frozen=True)
class GeodesicPosition:
    kind: Position
    tance: float
    angle: float | None = None  # radians in [0, pi/2], for concurrent geodesics


def _require_polar(p, G, tol):
    if classify_point(p, G, tol).kind is not PointKind.POSITIVE:
        raise NotPolar("a polar point must have positive norm")


def geodesic_position(p, q, G: HermitianMatrix, tol: float = RESULT_TOL) -> GeodesicPosition:
    """Relative position of the complex geodesics with polar points p and q."""
    _require_polar(p, G, DEGENERACY_TOL)
    _require_polar(q, G, DEGENERACY_TOL)
    ta = tance(p, q, G)
    if abs(ta - 1.0) <= tol:
        return GeodesicPosition(Position.ASYMPTOTIC, ta)
    if ta < 1.0:
        return GeodesicPosition(Position.CONCURRENT, ta, math.acos(math.sqrt(max(ta, 0.0))))
    return GeodesicPosition(Position.ULTRAPARALLEL, ta)


def reflection(p, G: HermitianMatrix) -> np.ndarray:
    """Matrix of x -> 2 <p, x> / <p, p> p - x, the order-two reflection with polar point p."""
    _require_polar(p, G, DEGENERACY_TOL)
    p = np.asarray(p, dtype=complex)
    row = np.conj(p) @ G.array  # x -> <p, x>
    m = 2.0 * np.outer(p, row) / norm_sq(p, G) - np.eye(3)
    m.setflags(write=False)
    return m


def gram_signature(G, tol: float = DEGENERACY_TOL) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    eig = np.linalg.eigvalsh(np.asarray(G, dtype=complex))
    plus = int(np.sum(eig > tol))
    minus = int(np.sum(eig < -tol))
    return plus, minus, 3 - plus - minus


def preserves(M, G: HermitianMatrix, tol: float = RESULT_TOL) -> bool:
    M = np.asarray(M)
    return bool(np.max(np.abs(M.conj().T @ G.array @ M - G.array)) <= tol)
