"""Rigorous enclosures of cos(pi/n).

The argument pi/n is enclosed using the two doubles bracketing pi, reduced to
[0, pi/4] (cosine or sine of the complement), and summed as a Taylor series
whose truncation is bounded by the Lagrange remainder theta^(m+1)/(m+1)!.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import UnsupportedAngle
from .interval import Interval

PI = Interval(math.pi, math.nextafter(math.pi, math.inf))


def _series(theta: float, odd: bool) -> Interval:
    """Enclose cos(theta) (or sin(theta) when odd) for a double 0 <= theta <= pi/4.

    The partial sum is exact in rationals; only the final result is rounded.
    """
    x = Fraction(theta)
    x2 = x * x
    term = x if odd else Fraction(1)
    total = term
    k = 1 if odd else 0
    while True:
        term = -term * x2 / ((k + 1) * (k + 2))
        k += 2
        total += term
        if abs(term) < Fraction(1, 10**25):
            break
    # alternating with decreasing terms: |remainder| <= next term
    nxt = abs(term) * x2 / ((k + 1) * (k + 2))
    return Interval(total - nxt, total + nxt)


def cos_enclosure(theta: Interval) -> Interval:
    """Enclose cos over theta, which must lie in [0, pi/2]."""
    if theta.lo < 0 or theta.hi > math.pi / 2 + 1e-12:
        raise UnsupportedAngle("cos_enclosure expects an argument in [0, pi/2]")
    # cos is decreasing on [0, pi/2]; evaluate at the endpoints
    return Interval(_cos_point(theta.hi).lo, _cos_point(theta.lo).hi)


def _cos_point(theta: float) -> Interval:
    if theta <= math.pi / 4:
        return _series(theta, odd=False)
    comp = (PI / 2) - Interval(theta)
    lo = _series(max(comp.lo, 0.0), odd=True)
    hi = _series(comp.hi, odd=True)
    return Interval(lo.lo, hi.hi)


@lru_cache(maxsize=None)
def cos_pi_over(n, width: float = 1e-15) -> Interval:
    """Enclosure of cos(pi/n) for an integer n >= 3 or n = inf."""
    if n == math.inf:
        return Interval(1.0)
    if not isinstance(n, int) or n < 3:
        raise UnsupportedAngle(f"n must be an integer >= 3 or infinity, got {n!r}")
    if n == 3:
        return Interval(0.5)
    if n == 4:
        return Interval(0.5).sqrt()
    theta = PI / n
    enc = cos_enclosure(theta)
    if enc.width > width:
        raise ArithmeticError(f"enclosure of cos(pi/{n}) too wide: {enc.width:g}")
    return enc


_EXACT_SQUARES = {3: Fraction(1, 4), 4: Fraction(1, 2), 6: Fraction(3, 4)}


@lru_cache(maxsize=None)
def cos_sq_pi_over(n) -> Interval:
    """Enclosure of cos(pi/n)**2, exact where the square is rational."""
    if n == math.inf:
        return Interval(1.0)
    if n in _EXACT_SQUARES:
        return Interval.exact(_EXACT_SQUARES[n])
    return cos_pi_over(n).sqr()
