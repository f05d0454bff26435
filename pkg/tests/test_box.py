import math
from fractions import Fraction

from chtriangles.rigor.box import Box, Endpoint
from chtriangles.verifier import claims as C


def test_same_label_endpoints_compare_equal():
    a, b = Endpoint.cos_pi(8), Endpoint.cos_pi(8)
    assert a.certainly_le(b) and b.certainly_le(a)
    assert Endpoint.cos_pi(4).certainly_le(Endpoint.cos_pi(8))
    assert not Endpoint.cos_pi(8).certainly_le(Endpoint.cos_pi(4))


def test_exact_squares_for_special_angles():
    e = Endpoint.cos_pi(4)
    assert e.square.lo == e.square.hi == 0.5
    assert Endpoint.cos_pi(math.inf) == Endpoint.exact(1)


def test_pinned_variable_and_ranges():
    box = C.slab9()
    assert box.is_pinned("x") and not box.is_pinned("y")
    assert box.range("x").width < 1e-15
    assert box.range("y").hi == 1.0


def test_contains_point_respects_chain():
    box = Box.cube("xyz", Fraction(1, 2), 1, chain="xyz")
    assert box.contains_point({"x": 0.5, "y": 0.75, "z": 1.0})
    assert not box.contains_point({"x": 0.8, "y": 0.75, "z": 1.0})
    assert box.without_chain().contains_point({"x": 0.8, "y": 0.75, "z": 1.0})
    assert not box.contains_point({"x": 0.4, "y": 0.75, "z": 1.0})


def test_chain_disjointness():
    box = Box({"x": Fraction(3, 4), "y": 0}, {"x": 1, "y": Fraction(1, 2)}, chain=("x", "y"))
    assert box.disjoint_from_chain()
