"""Outward-rounded real intervals over IEEE doubles.

Every operation computes the round-to-nearest result together with its
exact rounding error (error-free transformations), and only steps an
endpoint to the neighbouring double when the operation was inexact.  Exact
results therefore stay exact, which matters for claims that hold with
equality at a corner of their domain.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from ..errors import NegativeSqrt

_INF = math.inf
_SPLITTER = 134217729.0  # 2**27 + 1


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    if not math.isfinite(p):
        return p, 0.0
    ah, al = _split(a)
    bh, bl = _split(b)
    err = al * bl - (((p - ah * bh) - al * bh) - ah * bl)
    return p, err


# Error-free transforms are exact only away from underflow and overflow;
# outside this band the rounding direction is decided with rationals.
_TINY = 2.0**-900
_HUGE = 2.0**990


def _safe(*xs) -> bool:
    return all(x == 0 or _TINY < abs(x) < _HUGE for x in xs)


def _in_band(x: float) -> bool:
    return _TINY < abs(x) < _HUGE


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _residual_sign(approx: float, exact: Fraction) -> int:
    """Sign of exact - approx, for a rounded result of finite operands."""
    if math.isinf(approx):
        return -1 if approx > 0 else 1
    return _sign(exact - Fraction(approx))


def _sum(a: float, b: float) -> tuple[float, int]:
    s, e = two_sum(a, b)
    if math.isfinite(s):
        return s, _sign(e)
    _finite(a, b)
    return s, _residual_sign(s, Fraction(a) + Fraction(b))


def _prod(a: float, b: float) -> tuple[float, int]:
    if a == 0 or b == 0:
        _finite(a, b)
        return 0.0, 0
    if _safe(a, b) and _in_band(a * b):
        p, e = two_prod(a, b)
        return p, _sign(e)
    _finite(a, b)
    p = a * b
    return p, _residual_sign(p, Fraction(a) * Fraction(b))


def _finite(*xs):
    if not all(math.isfinite(x) for x in xs):
        raise ArithmeticError("interval endpoints must be finite")


def add_down(a: float, b: float) -> float:
    s, e = _sum(a, b)
    return _down(s) if e < 0 else s


def add_up(a: float, b: float) -> float:
    s, e = _sum(a, b)
    return _up(s) if e > 0 else s


def mul_down(a: float, b: float) -> float:
    p, e = _prod(a, b)
    return _down(p) if e < 0 else p


def mul_up(a: float, b: float) -> float:
    p, e = _prod(a, b)
    return _up(p) if e > 0 else p


def _div_round(a: float, b: float) -> tuple[float, int]:
    """Quotient a/b and the sign of (exact - rounded)."""
    q = a / b
    if a == 0:
        return q, 0
    if not (_safe(a, b) and _in_band(q) and _in_band(q * b)):
        _finite(a, b)
        return q, _residual_sign(q, Fraction(a) / Fraction(b))
    p, e = two_prod(q, b)
    r = (a - p) - e  # exact remainder a - q*b
    if r == 0:
        return q, 0
    return q, 1 if (r > 0) == (b > 0) else -1


def _fraction_bounds(q: Fraction) -> tuple[float, float]:
    f = float(q)
    exact = Fraction(f)
    if exact == q:
        return f, f
    if exact < q:
        return f, _up(f)
    return _down(f), f


class Interval:
    """Closed interval [lo, hi] with doubles as endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        if isinstance(lo, Rational) and not isinstance(lo, int):
            lo = _fraction_bounds(Fraction(lo))[0]
        if isinstance(hi, Rational) and not isinstance(hi, int):
            hi = _fraction_bounds(Fraction(hi))[1]
        lo, hi = float(lo), float(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def exact(cls, value) -> "Interval":
        """Tightest enclosure of an int, float or Fraction."""
        if isinstance(value, Interval):
            return value
        if isinstance(value, float):
            return cls(value, value)
        if isinstance(value, int):
            return cls(*_fraction_bounds(Fraction(value)))
        return cls(*_fraction_bounds(Fraction(value)))

    @classmethod
    def hull(cls, *items) -> "Interval":
        ivs = [cls.exact(x) for x in items]
        return cls(min(i.lo for i in ivs), max(i.hi for i in ivs))

    # -- queries -----------------------------------------------------------
    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        if not math.isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    def is_thin(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            return ((self.lo == -_INF or Fraction(self.lo) <= x)
                    and (self.hi == _INF or x <= Fraction(self.hi)))
        return self.lo <= x <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint intervals")
        return Interval(lo, hi)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        return Interval(add_down(self.lo, o.lo), add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return Interval(add_down(self.lo, -o.hi), add_up(self.hi, -o.lo))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        o = _coerce(other)
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        if a >= 0 and c >= 0:
            return Interval(mul_down(a, c), mul_up(b, d))
        if self.is_thin() and o.is_thin():
            return Interval(mul_down(a, c), mul_up(a, c))
        lo = min(mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
        hi = max(mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        cands_lo, cands_hi = [], []
        for x in (self.lo, self.hi):
            for y in (o.lo, o.hi):
                q, s = _div_round(x, y)
                cands_lo.append(_down(q) if s < 0 else q)
                cands_hi.append(_up(q) if s > 0 else q)
        return Interval(min(cands_lo), max(cands_hi))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def sqr(self) -> "Interval":
        a, b = self.lo, self.hi
        if a >= 0:
            return Interval(mul_down(a, a), mul_up(b, b))
        if b <= 0:
            return Interval(mul_down(b, b), mul_up(a, a))
        m = max(-a, b)
        return Interval(0.0, mul_up(m, m))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        if k == 0:
            return Interval(1.0)
        if k == 1:
            return self
        half = self.__pow__(k // 2).sqr()
        return half * self if k % 2 else half

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise NegativeSqrt(f"sqrt of {self!r}")
        return Interval(_sqrt_down(self.lo), _sqrt_up(self.hi))

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def min(self, other) -> "Interval":
        o = _coerce(other)
        return Interval(min(self.lo, o.lo), min(self.hi, o.hi))

    def max(self, other) -> "Interval":
        o = _coerce(other)
        return Interval(max(self.lo, o.lo), max(self.hi, o.hi))

    # -- certified comparisons --------------------------------------------
    def certainly_gt(self, other) -> bool:
        return self.lo > _coerce_upper(other)

    def certainly_ge(self, other) -> bool:
        return self.lo >= _coerce_upper(other)

    def certainly_lt(self, other) -> bool:
        return self.hi < _coerce_lower(other)

    def certainly_le(self, other) -> bool:
        return self.hi <= _coerce_lower(other)


def _sqrt_cmp(s: float, x: float) -> int:
    """Sign of s*s - x, exactly."""
    if x == 0:
        return 0
    if _safe(x) and _in_band(s * s):
        p, e = two_prod(s, s)
        return _sign(p - x) or _sign(e)
    return _sign(Fraction(s) ** 2 - Fraction(x))


def _sqrt_down(x: float) -> float:
    s = math.sqrt(x)
    return _down(s) if _sqrt_cmp(s, x) > 0 else s


def _sqrt_up(x: float) -> float:
    s = math.sqrt(x)
    return _up(s) if _sqrt_cmp(s, x) < 0 else s


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.exact(x)


def _coerce_upper(x) -> float:
    if isinstance(x, Interval):
        return x.hi
    if isinstance(x, Fraction):
        return _fraction_bounds(x)[1]
    return float(x) if isinstance(x, float) else _fraction_bounds(Fraction(x))[1]


def _coerce_lower(x) -> float:
    if isinstance(x, Interval):
        return x.lo
    if isinstance(x, Fraction):
        return _fraction_bounds(x)[0]
    return float(x) if isinstance(x, float) else _fraction_bounds(Fraction(x))[0]


def sqrt(x) -> Interval:
    return _coerce(x).sqrt()
