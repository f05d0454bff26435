from fractions import Fraction

import pytest

from chtriangles.errors import PlanUnsound
from chtriangles.rigor.box import Box
from chtriangles.rigor.monotone import Direct, Fix, Split, monotone_corner_bound, threshold_cleared
from chtriangles.rigor.interval import Interval
from chtriangles.rigor.poly import Poly

x, y = Poly.vars("x", "y")
box = Box.cube("xy", 1, 2)


def test_fix_to_corner_gives_exact_minimum():
    p = x * y + x
    plan = Fix("x", "lo", then=Fix("y", "lo"))
    out = monotone_corner_bound(p, box, plan, "min")
    assert out.bound.lo == out.bound.hi == 2.0
    assert out.certificate["method"] == "monotone"
    kinds = [n["kind"] for n in out.certificate["nodes"]]
    assert "fix" in kinds


def test_wrong_direction_is_unsound():
    with pytest.raises(PlanUnsound) as exc:
        monotone_corner_bound(x * y, box, Fix("x", "hi", then=Fix("y", "lo")), "min")
    assert "d/dx" in str(exc.value) and exc.value.node == ""


def test_unprovable_derivative_sign_is_unsound():
    p = (x - Fraction(3, 2)) ** 2
    with pytest.raises(PlanUnsound):
        monotone_corner_bound(p, box, Fix("x", "lo"), "min")


def test_split_combines_parts():
    p = (x - Fraction(3, 2)) ** 2 + y
    plan = Fix("y", "lo", then=Split("x", (Fraction(3, 2),), (Fix("x", "hi"), Fix("x", "lo"))))
    out = monotone_corner_bound(p, box, plan, "min")
    assert out.bound.contains(Fraction(1))


def test_factor_is_divided_out():
    # d/dx (x^2 y) = 2xy; dividing by 2x leaves y > 0
    plan = Fix("x", "lo", why=Direct(), factor=2 * x, then=Fix("y", "lo"))
    out = monotone_corner_bound(x**2 * y, box, plan, "min")
    assert out.bound.contains(1)


def test_neighbour_substitution_in_chain():
    chain = Box.cube("xy", 1, 2, chain="xy")
    out = monotone_corner_bound(y - x, chain, Fix("y", "x", then=Direct()), "min")
    assert out.bound.lo == out.bound.hi == 0.0


def test_threshold_cleared():
    assert threshold_cleared(Interval(1.5, 1.6), 1, "min", True)
    assert not threshold_cleared(Interval(1.0, 1.6), 1, "min", True)
    assert threshold_cleared(Interval(1.0, 1.6), 1, "min", False)
    assert threshold_cleared(Interval(-2, -1), -1, "max", False)
