import math

import pytest
from hypothesis import given, strategies as st
from mpmath import iv, mp, mpf

from chtriangles.errors import UnsupportedAngle
from chtriangles.rigor.cosine import cos_pi_over, cos_sq_pi_over
from reference import FROZEN

iv.dps = 60


def _meets(enc, true):
    # a valid enclosure must intersect the rigorous 60-digit enclosure of the true value
    return mpf(enc.lo) <= true.b and true.a <= mpf(enc.hi)


@given(st.integers(min_value=3, max_value=5000))
def test_cos_pi_over_encloses_true_value(n):
    true = iv.cos(iv.pi / n)
    enc = cos_pi_over(n)
    assert _meets(enc, true)
    assert enc.width <= 1e-15
    assert _meets(cos_sq_pi_over(n), true**2)


def test_frozen_cosines_enclosed():
    for n, key in ((14, "cos_pi_14"), (9, "cos_pi_9")):
        enc = cos_pi_over(n)
        assert mpf(enc.lo) <= mpf(FROZEN[key]) <= mpf(enc.hi)


def test_special_values():
    assert cos_pi_over(3).lo == cos_pi_over(3).hi == 0.5
    assert cos_pi_over(math.inf).lo == 1.0
    assert cos_sq_pi_over(4).contains(0.5)
    enc = cos_pi_over(4)
    assert enc.lo <= math.sqrt(0.5) <= enc.hi


@pytest.mark.parametrize("bad", [2, 0, -3, 2.5])
def test_rejects_bad_index(bad):
    with pytest.raises(UnsupportedAngle):
        cos_pi_over(bad)
