import copy
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chtriangles.rigor.bnb import Inconclusive, Proved, Refuted, prove_positive, recheck
from chtriangles.rigor.box import Box
from chtriangles.rigor.poly import Poly
from chtriangles.verifier import claims as C

x, y, z = Poly.vars("x", "y", "z")
unit = Box.cube("xy", 0, 1)


def test_proves_simple_positive():
    out = prove_positive(x * y + x + 1, unit, 0)
    assert isinstance(out, Proved) and out.certificate["method"] == "bnb"
    assert recheck(x * y + x + 1, unit, out.certificate, 0)


def test_refutes_with_genuine_witness():
    p = x - y - Fraction(1, 2)
    out = prove_positive(p, unit, 0)
    assert isinstance(out, Refuted)
    w = out.witness
    assert unit.contains_point(w)
    assert p.eval_exact({v: Fraction(c) for v, c in w.items()}) <= 0
    assert out.value.hi <= 0


def test_touching_zero_is_inconclusive_not_proved():
    p = (x - Fraction(1, 3)) ** 2
    box = Box.cube("x", 0, 1)
    out = prove_positive(p, box, 0, max_depth=12, strict=False)
    assert isinstance(out, Inconclusive)
    assert out.reason == "depth exhausted"


def test_non_strict_allows_equality_at_corner():
    box = Box.cube("x", 0, 1)
    assert prove_positive(x * (2 - x), box, 0, strict=False).proved
    assert isinstance(prove_positive(x * (2 - x), box, 0, strict=True), Refuted)


def test_box_budget_is_reported():
    p = (x - Fraction(1, 3)) ** 2 + (y - Fraction(1, 3)) ** 2
    out = prove_positive(p, unit, 0, strict=False, max_boxes=50)
    assert isinstance(out, Inconclusive) and "budget" in out.reason


def test_recheck_rejects_tampered_certificates():
    claim = C.get("L43_3")
    out = prove_positive(claim.expr, claim.box, claim.lower.threshold, 30)
    assert out.proved
    assert recheck(claim.expr, claim.box, out.certificate, claim.lower.threshold)
    # the same tree does not certify a larger threshold
    assert not recheck(claim.expr, claim.box, out.certificate, 297)
    bad = copy.deepcopy(out.certificate)
    node = bad["tree"]
    while "split" in node:
        node = node["children"][0]
    node["leaf"] = "infeasible"
    assert not recheck(claim.expr, claim.box, bad, claim.lower.threshold)


def test_chain_matters_for_g1():
    claim = C.get("L43_1")
    proved = prove_positive(claim.expr, claim.box, 0, strict=False)
    assert proved.proved and proved.certificate["coordinates"] == "gap"
    out = prove_positive(claim.expr, claim.box.without_chain(), 0, strict=False)
    assert isinstance(out, Refuted)
    w = {v: Fraction(c) for v, c in out.witness.items()}
    assert claim.expr.eval_exact(w) < 0


@settings(max_examples=60)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=8), min_size=3, max_size=3),
       st.fractions(min_value=-2, max_value=2, max_denominator=8))
def test_verdicts_are_consistent_with_sampling(cs, t):
    # quadratic in two variables; Proved must agree with a dense exact sample
    p = cs[0] * x**2 + cs[1] * x * y + cs[2] * y - t
    out = prove_positive(p, unit, 0, max_depth=14)
    grid = [Fraction(i, 16) for i in range(17)]
    values = [p.eval_exact({"x": a, "y": b}) for a in grid for b in grid]
    if out.proved:
        assert min(values) > 0
    if isinstance(out, Refuted):
        w = {v: Fraction(c) for v, c in out.witness.items()}
        assert p.eval_exact(w) <= 0
    if min(values) <= 0:
        assert not out.proved
