"""Hand-written monotone plans, one per registered claim side.

Each plan states where the extremum sits and why: every ``Fix`` carries the
sub-plan that bounds the relevant partial derivative.  Leaves marked ``Direct``
are plain interval bounds; the ones that only need ``8 z^2 - 3 > 0`` on the
cos(pi/14) cube say so in their note.
"""

from __future__ import annotations

from fractions import Fraction

from ..rigor.monotone import Direct, Fix, Split
from ..rigor.poly import Poly
from .claims import C8

x, y, z = Poly.vars("x", "y", "z")

BY_8Z2 = Direct("sign from 8 r^2 - 3 > 0")


def _chain(*steps, last=None):
    """Nest (var, to, why, factor) steps into successive Fix nodes."""
    plan = last or Direct()
    for var, to, why, factor in reversed(steps):
        plan = Fix(var, to, then=plan, why=why, factor=factor)
    return plan


def _others(v):
    return [w for w in "xyz" if w != v]


# 4 f1: d/dv = 16 v Q_v with Q_v decreasing in v and increasing in the other
# two variables, so Q_v >= Q_v(1, c, c) > 0.  f1 is increasing everywhere.
def _f1_why(v):
    a, b = _others(v)
    return _chain((v, "hi", Direct("second derivative is negative"), None),
                  (a, "lo", BY_8Z2, None), (b, "lo", BY_8Z2, None))


F1_MIN = _chain(*[(v, "lo", _f1_why(v), 16 * Poly.var(v)) for v in "xyz"])
F1_MAX = _chain(*[(v, "hi", _f1_why(v), 16 * Poly.var(v)) for v in "xyz"])


# f2: d/dv = 8 v (-8S + 9 + 16 a^2 b^2), decreasing in v, increasing in a and b.
def _f2_why(v):
    a, b = _others(v)
    return _chain((v, "hi", Direct(), None), (a, "lo", Direct(), None), (b, "lo", Direct(), None))


F2_MIN = _chain(*[(v, "lo", _f2_why(v), 8 * Poly.var(v)) for v in "xyz"])

# 2 f3: d/dx = 16(4yz - 3x) > 0 directly, and symmetrically.
F3_MIN = _chain(*[(v, "lo", Direct(), None) for v in "xyz"])

# f4: d/dx = 16x R, R increasing in x (16y^4 - 12y^2 + 3 > 0) and in y
# (mixed derivative positive), decreasing in z; the same holds for y by
# symmetry.  d/dz = 8z(12(x^2+y^2) - 32x^2y^2 + 8z^2 - 5) is increasing in z.
F4_WHY_X = _chain(("x", "lo", Direct("16y^4 - 12y^2 + 3 > 0"), None),
                  ("y", "lo", Direct("mixed derivative is positive"), None),
                  ("z", "hi", BY_8Z2, None))
F4_WHY_Y = _chain(("y", "lo", Direct("16x^4 - 12x^2 + 3 > 0"), None), ("z", "hi", BY_8Z2, None))
F4_MIN = _chain(("x", "lo", F4_WHY_X, 16 * x), ("y", "lo", F4_WHY_Y, 16 * y),
                ("z", "hi", Fix("z", "hi", why=Direct("increasing in z")), 8 * z))

# g1: z down to y, then x up to y (1 - 2y^2 <= 0), then -4y^4 + 5y^2 - 1 >= 0.
G1_MIN = Fix("z", "y", why=Direct(), then=Fix(
    "x", "y", factor=4 * x, why=Direct("1 - 2 y^2 <= 0"),
    then=Split("y", (Fraction(4, 5),), (
        Direct(),
        Fix("y", "hi", factor=2 * y, why=Direct("5 - 8 y^2 < 0")),
    )),
))

# g2: z down to y; above cos(pi/8) the chain x <= y is slack and x goes to
# cos(pi/8), then y to 1; below it x moves up to y and -16y^4 + 20y^2 - 5
# is handled piecewise around its maximum near y^2 = 5/8.
G2_MIN = Fix("z", "y", why=Direct(), then=Split("y", (C8,), (
    Fix("x", "y", factor=16 * x, why=Direct("1 - 2 y^2 <= 0"), then=Split("y", (Fraction(79, 100), Fraction(4, 5)), (
        Fix("y", "lo", factor=8 * y, why=Direct("5 - 8 y^2 > 0")),
        Direct(),
        Fix("y", "hi", factor=8 * y, why=Direct("5 - 8 y^2 < 0")),
    ))),
    Fix("x", "hi", factor=16 * x, why=Direct("1 - 2 y^2 <= 0"),
        then=Fix("y", "hi", factor=8 * y, why=Direct("3 - 4 x^2 < 0"))),
)))

# g3: increasing in z (so z = y), then increasing in y.
G3_MIN = Fix("z", "y", factor=8 * z, why=Direct(), then=Fix("y", "lo", factor=y, why=Direct()))

# g4: decreasing in z (z = y), then increasing in y; maximum at y = z = 1.
G4_MAX = Fix("z", "y", factor=4 * z, why=Direct(), then=Fix("y", "hi", factor=y, why=Direct()))

# g5: decreasing in y (y = z), then h(z) = g5(z, z) decreasing; minimum h(1).
G5_MIN = Fix("y", "z", factor=8 * y, why=Fix("z", "hi", why=Direct("104 x^2 - 27 > 0"),
                                          then=Fix("y", "lo", why=Direct("y^2 coefficient is negative"))),
             then=Fix("z", "hi", factor=4 * z,
                      why=Fix("z", "lo", factor=8 * z, why=Direct("-208 x^4 + 212 x^2 - 67 < 0"))))

INLINE_31_MIN = F3_MIN
INLINE_35_MAX = Fix("z", "y", why=Direct(), then=Fix("y", "lo", why=Direct()))
INEQ_4_2 = Direct("point evaluation")

PLANS = {
    ("L41_1", "lower"): F1_MIN,
    ("L41_1", "upper"): F1_MAX,
    ("L41_3", "lower"): F2_MIN,
    ("L41_4", "lower"): F3_MIN,
    ("L41_5", "lower"): F4_MIN,
    ("L43_1", "lower"): G1_MIN,
    ("L43_2", "lower"): G2_MIN,
    ("L43_3", "lower"): G3_MIN,
    ("L43_4", "upper"): G4_MAX,
    ("L43_5", "lower"): G5_MIN,
    ("ineq_4_2", "lower"): INEQ_4_2,
    ("inline_31", "lower"): INLINE_31_MIN,
    ("inline_35", "upper"): INLINE_35_MAX,
}
