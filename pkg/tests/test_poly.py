from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chtriangles.errors import VariableMismatch
from chtriangles.rigor.interval import Interval
from chtriangles.rigor.poly import Poly

x, y, z = Poly.vars("x", "y", "z")

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
exps = st.integers(min_value=0, max_value=4)


@st.composite
def polys(draw):
    p = Poly.const(0)
    for _ in range(draw(st.integers(min_value=1, max_value=6))):
        p = p + draw(coeffs) * x ** draw(exps) * y ** draw(exps) * z ** draw(exps)
    return p


points = st.fixed_dictionaries({v: st.fractions(min_value=-3, max_value=3, max_denominator=50) for v in "xyz"})


@given(polys(), polys(), points)
def test_ring_operations_agree_with_evaluation(p, q, pt):
    assert (p + q).eval_exact(pt) == p.eval_exact(pt) + q.eval_exact(pt)
    assert (p * q).eval_exact(pt) == p.eval_exact(pt) * q.eval_exact(pt)
    assert (p - q).eval_exact(pt) == p.eval_exact(pt) - q.eval_exact(pt)
    assert (p**2).eval_exact(pt) == p.eval_exact(pt) ** 2


def _d(p, v):
    return p.partial(v) if v in p.variables else Poly.const(0)


@given(polys(), polys())
def test_partial_obeys_product_rule(p, q):
    assert _d(p * q, "x") == _d(p, "x") * q + p * _d(q, "x")
    assert _d(p + q, "y") == _d(p, "y") + _d(q, "y")


def test_partial_in_absent_variable_is_rejected():
    with pytest.raises(VariableMismatch):
        (y * z).partial("x")


@given(polys(), st.data())
def test_enclosure_contains_point_values(p, data):
    ranges, pt = {}, {}
    for v in "xyz":
        a = data.draw(st.fractions(min_value=-2, max_value=2, max_denominator=64))
        w = data.draw(st.fractions(min_value=0, max_value=2, max_denominator=64))
        ranges[v] = Interval(a, a + w)
        u = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=97))
        pt[v] = Fraction(ranges[v].lo) + u * (Fraction(ranges[v].hi) - Fraction(ranges[v].lo))
    assert p.enclose(ranges).contains(p.eval_exact(pt))


def test_canonical_form_equality():
    assert (x + y) ** 2 == x**2 + 2 * x * y + y**2
    assert (x - y) * (x + y) != x**2 + y**2
    assert (x + 1 - x).is_constant() and (x + 1 - x).constant_value() == 1


def test_substitute_and_divide():
    p = (x**2 + y) * 4 * x
    assert p.substitute({"y": x}) == 4 * x**3 + 4 * x**2
    assert p.divide_monomial(4 * x) == x**2 + y
    with pytest.raises(ValueError):
        p.divide_monomial(y)


def test_gradient_and_variables():
    p = x**2 * y + 3 * z
    assert p.variables == ("x", "y", "z")
    g = p.gradient()
    assert g["x"] == 2 * x * y and g["y"] == x**2 and g["z"] == Poly.const(3)


def test_missing_variable_is_reported():
    with pytest.raises(VariableMismatch):
        (x * y).enclose({"x": Interval(0, 1)})
    with pytest.raises(VariableMismatch):
        (x * y).eval_exact({"x": 1})


def test_even_powers_use_square_ranges():
    # x^2 - 2x^2 over [-1, 1] with x^2 known to be exactly 1
    p = x**2
    tight = p.enclose({"x": Interval(-1, 1)}, {"x": Interval(1, 1)})
    assert tight.lo == tight.hi == 1.0
