import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chtriangles.rigor.interval import Interval, add_down, add_up, mul_down, mul_up, two_prod, two_sum

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
anyfloat = st.floats(allow_nan=False, allow_infinity=False)
moderate = st.one_of(st.just(0.0), st.floats(min_value=1e-100, max_value=1e100), st.floats(min_value=-1e100, max_value=-1e-100))


@st.composite
def intervals(draw):
    a, b = draw(finite), draw(finite)
    return Interval(min(a, b), max(a, b))


def _member(draw, iv):
    # an exact rational inside iv
    u = draw(st.fractions(min_value=0, max_value=1, max_denominator=1000))
    return Fraction(iv.lo) + u * (Fraction(iv.hi) - Fraction(iv.lo))


@given(moderate, moderate)
def test_error_free_transforms(a, b):
    s, e = two_sum(a, b)
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)
    p, e = two_prod(a, b)
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


def _le(f: float, q: Fraction) -> bool:
    return f == -math.inf or (f != math.inf and Fraction(f) <= q)


def _ge(f: float, q: Fraction) -> bool:
    return f == math.inf or (f != -math.inf and Fraction(f) >= q)


@given(anyfloat, anyfloat)
def test_directed_rounding_brackets(a, b):
    # includes subnormal products and overflow
    exact = Fraction(a) + Fraction(b)
    assert _le(add_down(a, b), exact) and _ge(add_up(a, b), exact)
    exact = Fraction(a) * Fraction(b)
    assert _le(mul_down(a, b), exact) and _ge(mul_up(a, b), exact)


@given(anyfloat, anyfloat)
def test_division_brackets(a, b):
    if b == 0:
        return
    q = Interval(a) / Interval(b)
    exact = Fraction(a) / Fraction(b)
    assert _le(q.lo, exact) and _ge(q.hi, exact)


@given(st.floats(min_value=0, allow_infinity=False))
def test_sqrt_brackets_everywhere(a):
    r = Interval(a).sqrt()
    assert Fraction(r.lo) ** 2 <= Fraction(a) <= Fraction(r.hi) ** 2


@given(st.data(), intervals(), intervals())
def test_arithmetic_contains_exact_result(data, x, y):
    a, b = _member(data.draw, x), _member(data.draw, y)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    assert x.sqr().contains(a * a)
    assert (-x).contains(-a)
    if y.lo > 0 or y.hi < 0:
        assert (x / y).contains(a / b)


@given(st.data(), intervals())
def test_sqrt_contains(data, x):
    x = Interval(abs(x.lo) if x.lo >= 0 else 0.0, max(abs(x.hi), abs(x.lo)))
    a = _member(data.draw, x)
    r = x.sqrt()
    lo, hi = Fraction(r.lo), Fraction(r.hi)
    assert lo * lo <= a <= hi * hi


def test_exact_fraction_enclosure_is_tight():
    iv = Interval.exact(Fraction(1, 3))
    assert iv.contains(Fraction(1, 3))
    assert iv.hi == math.nextafter(iv.lo, math.inf)


def test_sqr_of_straddling_interval_is_nonnegative():
    assert Interval(-2, 3).sqr().lo == 0.0


def test_division_by_interval_containing_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Interval(1) / Interval(-1, 1)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_certain_comparisons():
    x = Interval(1, 2)
    assert x.certainly_gt(0.5) and not x.certainly_gt(1)
    assert x.certainly_ge(1) and x.certainly_le(2)
    assert x.certainly_lt(Fraction(5, 2)) and not x.certainly_lt(2)
