"""The registered inequalities and the polynomials they are about.

Every claim is a polynomial (plus an optional interval constant for the one
irrational offset) compared with exact rational thresholds over a box whose
ends are cos(pi/n) enclosures.  Variables x, y, z stand for r1 <= r2 <= r3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from ..errors import UnknownClaim
from ..rigor.box import Box, Endpoint
from ..rigor.interval import Interval
from ..rigor.poly import Poly

x, y, z = Poly.vars("x", "y", "z")

S = x**2 + y**2 + z**2
A = 4 * S - 3  # minus the centre of the trace circle
P = x * y * z
B = z**2 + 4 * x**2 * y**2 - 1  # 4 r1 r2 r3 t_WA

f1 = -3 * A**2 + (16 * P) ** 2
f2 = -(A**2) + 3 * A + (8 * P) ** 2 - 9
f3 = -3 * A + 32 * P
f4 = 3 * A**2 - 12 * B * A + 16 * B**2 - (8 * P) ** 2

g1 = 2 * (x**2 + y**2 - 2 * x**2 * y**2) + z**2 - 1
g2 = 8 * (x**2 + y**2 - 2 * x**2 * y**2) + 4 * z**2 - 5
g3 = -27 * A**2 - 54 * A + 52 * (8 * P) ** 2 - 27
g4_poly = 2 * B - A  # g4 = g4_poly - x1
g5 = 25 * ((4 * P) ** 2 - B**2) - 27 * (2 * y**2 * (1 - 2 * x**2) + 2 * x**2 + z**2) ** 2


def x1_enclosure() -> Interval:
    """(79 - 50 sqrt(10)) / 169, the left deltoid crossing of the line through (1, 0)."""
    return (Interval.exact(79) - 50 * Interval.exact(10).sqrt()) / Interval.exact(169)


C14 = Endpoint.cos_pi(14)
C9 = Endpoint.cos_pi(9)
C8 = Endpoint.cos_pi(8)
C4 = Endpoint.cos_pi(4)
ONE = Endpoint.exact(1)


def cube14() -> Box:
    return Box.cube("xyz", C14, ONE)


def chain4() -> Box:
    return Box.cube("xyz", C4, ONE, chain="xyz")


def chain4_8() -> Box:
    return Box({"x": C4, "y": C4, "z": C4}, {"x": C8, "y": ONE, "z": ONE}, ("x", "y", "z"), ("x", "y", "z"))


def slab9() -> Box:
    """x pinned to cos(pi/9), cos(pi/9) <= y <= z <= 1."""
    return Box({"x": C9, "y": C9, "z": C9}, {"x": C9, "y": ONE, "z": ONE}, ("y", "z"), ("x", "y", "z"))


def pin14() -> Box:
    return Box({"x": C14}, {"x": C14})


@dataclass(frozen=True)
class Side:
    threshold: Fraction
    strict: bool


@dataclass(frozen=True)
class Claim:
    name: str
    expr: Poly
    box: Box
    lower: Side | None = None  # expr + offset > (>=) threshold
    upper: Side | None = None  # expr + offset < (<=) threshold
    offset: Interval | None = None
    statement: str = ""

    def relation(self) -> str:
        parts = []
        if self.lower is not None:
            parts.append(f"{'>' if self.lower.strict else '>='} {self.lower.threshold}")
        if self.upper is not None:
            parts.append(f"{'<' if self.upper.strict else '<='} {self.upper.threshold}")
        return " and ".join(parts)

    def with_threshold(self, value, side: str | None = None) -> "Claim":
        """A copy with one threshold replaced (negative controls)."""
        side = side or ("lower" if self.lower is not None else "upper")
        old = getattr(self, side)
        return replace(self, **{side: Side(Fraction(value), old.strict)})

    def without_chain(self) -> "Claim":
        return replace(self, box=self.box.without_chain())


def _lo(q, strict=True):
    return Side(Fraction(q), strict)


def _build() -> dict:
    claims = [
        Claim("L41_1", 4 * f1, cube14(), lower=_lo(31), upper=Side(Fraction(52), False),
              statement="31 < 4 f1 <= 52 on [cos(pi/14), 1]^3"),
        Claim("L41_3", f2, cube14(), lower=_lo(Fraction(1, 2)),
              statement="f2 > 1/2 on [cos(pi/14), 1]^3"),
        Claim("L41_4", 2 * f3, cube14(), lower=_lo(Fraction(44, 5)),
              statement="2 f3 > 44/5 on [cos(pi/14), 1]^3"),
        Claim("L41_5", f4, cube14(), lower=_lo(Fraction(1, 10)),
              statement="f4 > 1/10 on [cos(pi/14), 1]^3"),
        Claim("L43_1", g1, chain4(), lower=_lo(0, strict=False),
              statement="g1 >= 0 on cos(pi/4) <= x <= y <= z <= 1"),
        Claim("L43_2", g2, chain4_8(), lower=_lo(Fraction(1, 10)),
              statement="g2 > 1/10 on cos(pi/4) <= x <= cos(pi/8), x <= y <= z <= 1"),
        Claim("L43_3", g3, slab9(), lower=_lo(296),
              statement="g3 > 296 at x = cos(pi/9), cos(pi/9) <= y <= z <= 1"),
        Claim("L43_4", g4_poly, slab9(), upper=_lo(Fraction(-9, 10)), offset=-x1_enclosure(),
              statement="g4 < -9/10 at x = cos(pi/9), cos(pi/9) <= y <= z <= 1"),
        Claim("L43_5", g5, slab9(), lower=_lo(Fraction(1, 5)),
              statement="g5 > 1/5 at x = cos(pi/9), cos(pi/9) <= y <= z <= 1"),
        Claim("ineq_4_2", 8 * x**2 - 3, pin14(), lower=_lo(0),
              statement="8 cos^2(pi/14) - 3 > 0"),
        Claim("inline_31", 2 * A - 8, cube14(), lower=_lo(Fraction(44, 5)),
              statement="2(4(x^2+y^2+z^2) - 3) - 8 > 44/5 on [cos(pi/14), 1]^3"),
        Claim("inline_35", -50 * A + 210, slab9(), upper=_lo(0),
              statement="-50(4(x^2+y^2+z^2) - 3) + 210 < 0 at x = cos(pi/9), cos(pi/9) <= y <= z <= 1"),
    ]
    out = {}
    for c in claims:
        if c.name in out:
            raise ValueError(f"duplicate claim {c.name}")
        out[c.name] = c
    return out


_REGISTRY = _build()

# consequences of registered claims that need no search of their own
DEDUCTIONS = ("L41_2",)


def registry() -> list[Claim]:
    return list(_REGISTRY.values())


def get(name: str) -> Claim:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownClaim(name) from None


def names() -> list[str]:
    return list(_REGISTRY)


def deduce_L41_2() -> tuple[bool, Interval]:
    """5.5 < sqrt(4 f1) < 7.3 follows from the two sides of L41_1."""
    c = get("L41_1")
    r = Interval(Interval.exact(c.lower.threshold).sqrt().lo, Interval.exact(c.upper.threshold).sqrt().hi)
    return r.certainly_gt(Fraction(11, 2)) and r.certainly_lt(Fraction(73, 10)), r
