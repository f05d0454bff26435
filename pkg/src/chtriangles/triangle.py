"""Parameters of (n1, n2, n3)-triangles and the canonical deformation path.

A triangle with angles pi/n_i is determined by r_i = cos(pi/n_i) and the real
part t of the unit number eps, taken with Im eps >= 0.  The family is
parametrised by t in [-1, t_max].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGram, DomainError, Inadmissible, UnsupportedAngle
from .hermitian import HermitianMatrix

INF = math.inf


def parse_n(value) -> float | int:
    """Accept an int >= 3, math.inf, or the strings 'inf' / 'infinity'."""
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        try:
            value = int(value)
        except ValueError:
            raise UnsupportedAngle(f"not an angle index: {value!r}") from None
    if value == INF:
        return INF
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise UnsupportedAngle(f"n must be an integer or infinity, got {value!r}")
    if value < 3:
        raise UnsupportedAngle(f"n must be at least 3, got {value}")
    return int(value)


def format_n(n) -> str:
    return "inf" if n == INF else str(n)


@dataclass(frozen=True, order=True)
class TriangleAngles:
    n1: float | int
    n2: float | int
    n3: float | int

    def __post_init__(self):
        ns = [parse_n(n) for n in (self.n1, self.n2, self.n3)]
        if ns != sorted(ns):
            raise UnsupportedAngle(f"angles must be sorted n1 <= n2 <= n3, got {ns}")
        object.__setattr__(self, "n1", ns[0])
        object.__setattr__(self, "n2", ns[1])
        object.__setattr__(self, "n3", ns[2])

    @classmethod
    def of(cls, *ns) -> "TriangleAngles":
        return cls(*sorted(parse_n(n) for n in ns))

    def radii(self) -> tuple[float, float, float]:
        return r_of_n(self.n1), r_of_n(self.n2), r_of_n(self.n3)

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3))

    def __str__(self):
        return "(" + ",".join(format_n(n) for n in self) + ")"


def r_of_n(n) -> float:
    n = parse_n(n)
    if n == INF:
        return 1.0
    if n == 3:
        return 0.5
    return math.cos(math.pi / n)


def _check_r(r1, r2, r3):
    for r in (r1, r2, r3):
        if not 0 < r <= 1:
            raise DomainError(f"r must lie in (0, 1], got {r!r}")


def admissibility(r1, r2, r3, t) -> float:
    """1 + 2 r1 r2 r3 t - (r1^2 + r2^2 + r3^2); admissible when <= 0."""
    return 1 + 2 * r1 * r2 * r3 * t - (r1 * r1 + r2 * r2 + r3 * r3)


def admissible(r1, r2, r3, t, tol: float = 0.0) -> bool:
    _check_r(r1, r2, r3)
    if abs(t) > 1:
        raise DomainError(f"|t| must be at most 1, got {t!r}")
    return admissibility(r1, r2, r3, t) <= tol


def epsilon_of_t(t) -> complex:
    if abs(t) > 1:
        raise DomainError(f"|t| must be at most 1, got {t!r}")
    return complex(t, math.sqrt(max(0.0, 1.0 - t * t)))


def varkappa(G) -> complex:
    """<p1,p2><p2,p3><p3,p1> / (<p1,p1><p2,p2><p3,p3>) for the basis with Gram matrix G."""
    a = np.asarray(G, dtype=complex)
    d = np.real(np.diag(a))
    if np.min(np.abs(d)) < 1e-12:
        raise DegenerateGram("a basis vector is isotropic")
    return complex(a[0, 1] * a[1, 2] * a[2, 0] / (d[0] * d[1] * d[2]))


@dataclass(frozen=True)
class Thresholds:
    t_M: float
    t_max: float
    t_WA: float


def thresholds(r1, r2, r3) -> Thresholds:
    _check_r(r1, r2, r3)
    p = r1 * r2 * r3
    t_M = (r1 * r1 + r2 * r2 + r3 * r3 - 1) / (2 * p)
    t_WA = (r3 * r3 + 4 * r1 * r1 * r2 * r2 - 1) / (4 * p)
    return Thresholds(t_M, min(t_M, 1.0), t_WA)


def build_gram(r1, r2, r3, t, tol: float = 1e-12) -> HermitianMatrix:
    if not admissible(r1, r2, r3, t, tol):
        raise Inadmissible(f"(r, t) = ({r1}, {r2}, {r3}, {t}) violates the admissibility inequality")
    eps = epsilon_of_t(t)
    return HermitianMatrix.from_upper((1.0, 1.0, 1.0), r1, r3 * eps.conjugate(), r2)


@dataclass(frozen=True)
class TriangleParams:
    r1: float
    r2: float
    r3: float
    t: float

    def __post_init__(self):
        if not admissible(self.r1, self.r2, self.r3, self.t, 1e-12):
            raise Inadmissible(f"{self} violates the admissibility inequality")

    def gram(self) -> HermitianMatrix:
        return build_gram(self.r1, self.r2, self.r3, self.t)

    @property
    def radii(self) -> tuple[float, float, float]:
        return self.r1, self.r2, self.r3


def family_nonempty(angles: TriangleAngles, slack: float = 1e-12) -> bool:
    """Whether the path [-1, t_max] has more than one point."""
    return thresholds(*angles.radii()).t_max > -1 + slack
