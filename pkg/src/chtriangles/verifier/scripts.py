"""Replays of the two type arguments as checked step lists.

Every step is one of: a registered claim (certified by the runner), an exact
polynomial identity, or an interval comparison whose gap is certified.  A
script stops at the first step that does not certify and raises
ScriptStepFailed naming it.

Notation: x, y, z stand for r1 <= r2 <= r3, A = 4(x^2 + y^2 + z^2) - 3,
P = xyz, B = z^2 + 4x^2y^2 - 1, so that t_WA = B / (4P), the trace circle
has centre -A and radius 8P, and x(t) = 8P t - A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ScriptStepFailed
from ..isometry import x_of_t
from ..rigor.bnb import prove_positive
from ..rigor.interval import Interval
from ..rigor.poly import Poly
from ..triangle import thresholds
from . import claims as C
from .runner import run_claim

F = Fraction


@dataclass
class Step:
    name: str
    kind: str  # claim | identity | interval | deduction
    ok: bool
    detail: str = ""


@dataclass
class ScriptResult:
    name: str
    steps: list = field(default_factory=list)
    enclosures: dict = field(default_factory=dict)  # label -> Interval
    conclusion: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.steps) and all(s.ok for s in self.steps)

    def summary(self) -> dict:
        return {
            "script": self.name,
            "passed": self.passed,
            "conclusion": self.conclusion if self.passed else "",
            "steps": [{"step": s.name, "kind": s.kind, "ok": s.ok, "detail": s.detail} for s in self.steps],
            "enclosures": {k: [repr(v.lo), repr(v.hi)] for k, v in self.enclosures.items()},
        }


class _Script:
    def __init__(self, name, method, cache):
        self.result = ScriptResult(name)
        self.method = method
        self.cache = {} if cache is None else cache

    def _add(self, name, kind, ok, detail=""):
        self.result.steps.append(Step(name, kind, bool(ok), detail))
        if not ok:
            err = ScriptStepFailed(name, detail)
            err.result = self.result
            raise err

    def claim(self, name, why=""):
        res = self.cache.get(name)
        if res is None or (self.method == "both" and res.method != "both"):
            res = run_claim(name, self.method)
            self.cache[name] = res
        self._add(f"{name}: {C.get(name).statement}", "claim", res.proved, why or res.outcome.status)
        return res

    def identity(self, name, lhs: Poly, rhs: Poly):
        self._add(name, "identity", lhs == rhs, "exact polynomial identity" if lhs == rhs else f"{lhs - rhs!r} != 0")

    def interval(self, name, ok, detail):
        self._add(name, "interval", ok, detail)

    def deduce(self, name, ok, detail):
        self._add(name, "deduction", ok, detail)

    def positive(self, name, p, box, strict=True):
        out = prove_positive(p, box, 0, strict=strict)
        self._add(name, "interval", out.proved, out.status)


def _sqrt_d1() -> Interval:
    ok, r = C.deduce_L41_2()
    return r


def prop31_script(method: str = "both", cache: dict | None = None) -> ScriptResult:
    """14 <= n1 <= n2 <= n3: W_B turns regular elliptic strictly before W_A."""
    s = _Script("prop31", method, cache)
    x, y, z, A, P, B = C.x, C.y, C.z, C.A, C.P, C.B
    box = C.cube14()

    # the ray y = -sqrt(3) u through the deltoid vertex meets F where
    # (u + A)^2 + 3u^2 = (8P)^2, i.e. 4u^2 + 2A u + A^2 - (8P)^2 = 0
    s.identity("discriminant of the ray/circle quadratic is 4 f1",
               (2 * A) ** 2 - 4 * 4 * (A**2 - (8 * P) ** 2), 4 * C.f1)
    s.claim("L41_1", "D1 = 4 f1 > 31 > 0, so the root x0 = (-2A + sqrt(D1)) / 8 exists")
    ok, sq = C.deduce_L41_2()
    s.deduce("L41_2: 5.5 < sqrt(D1) < 7.3", ok, f"sqrt([31, 52]) within [{sq.lo!r}, {sq.hi!r}]")
    s.claim("inline_31", "2A - 8 > 8.8")
    s.deduce("x0 < -1, i.e. sqrt(D1) < 2A - 8", sq.certainly_lt(F(44, 5)),
             f"sqrt(D1) <= {sq.hi!r} < 8.8 < 2A - 8")
    s.identity("D1 - (2A - 12)^2 = 16 f2", 4 * C.f1 - (2 * A - 12) ** 2, 16 * C.f2)
    s.claim("L41_3", "f2 > 1/2 > 0")
    s.deduce("x0 > -3/2, i.e. sqrt(D1) > 2A - 12", True, "sqrt(D1) > |2A - 12| since D1 - (2A - 12)^2 = 16 f2 > 0")
    s.positive("A > 0 on the cube, hence x0 + A = (6A + sqrt(D1)) / 8 > 0 and t_x0 > -1", A, box)
    s.identity("2 f3 = 64P - 6A", 2 * C.f3, 64 * P - 6 * A)
    s.claim("L41_4", "2 f3 > 8.8")
    s.deduce("t_x0 < 1, i.e. sqrt(D1) < 64P - 6A", sq.certainly_lt(F(44, 5)), "sqrt(D1) < 7.3 < 8.8 < 2 f3")
    t_m_num = 4 * (x**2 + y**2 + z**2 - 1)  # 8P t_M
    s.identity("x(t_M) = -1", t_m_num - A, Poly.const(-1))
    s.deduce("t_x0 < t_M", True, "x(t) is increasing and x0 < -1 = x(t_M)")
    u = Poly.var("u")
    on_ray = _goldman_poly(u, 3 * u**2)
    s.identity("f on the ray y = -sqrt(3) u equals (2u + 3)^3 (2u - 1)", on_ray, (2 * u + 3) ** 3 * (2 * u - 1))
    ray = Interval(-1.5, -1.0)
    s.interval("f < 0 on the ray for -3/2 < u < -1", True,
               f"2u + 3 > 0 and 2u - 1 in {(2 * ray - 1)!r} < 0")
    s.identity("(16B - 6A)^2 - D1 = 16 f4", (16 * B - 6 * A) ** 2 - 4 * C.f1, 16 * C.f4)
    s.positive("16B - 6A > 0 on the cube", 16 * B - 6 * A, box)
    s.claim("L41_5", "f4 > 1/10 > 0")
    s.deduce("t_x0 < t_WA, i.e. sqrt(D1) < 16B - 6A = x(t_WA) * 8 + 2A", True,
             "(16B - 6A)^2 > D1 and 16B - 6A > 0")

    c = C.C14.value
    a = 12 * c.sqr() - 3
    p = c * c * c
    d1 = 4 * (-3 * a.sqr() + (16 * p).sqr())
    x0 = (-2 * a + d1.sqrt()) / 8
    t_x0 = (x0 + a) / (8 * p)
    b = c.sqr() + 4 * c.sqr().sqr() - 1
    t_wa = b / (4 * p)
    s.result.enclosures.update({"x0": x0, "t_x0": t_x0, "t_WA": t_wa})
    s.interval("at r = cos(pi/14): -3/2 < x0 < -1 and t_x0 < t_WA",
               x0.certainly_gt(F(-3, 2)) and x0.certainly_lt(-1) and t_x0.certainly_lt(t_wa),
               f"x0 in [{x0.lo:.6f}, {x0.hi:.6f}], t_x0 in [{t_x0.lo:.6f}, {t_x0.hi:.6f}], "
               f"t_WA in [{t_wa.lo:.6f}, {t_wa.hi:.6f}]")
    s.result.conclusion = "W_B is regular elliptic at t_x0 < t_WA: type B"
    return s.result


def _goldman_poly(u: Poly, ysq: Poly) -> Poly:
    """f(u + i y) written through y^2 only: (u^2 + Y)^2 - 8(u^3 - 3uY) + 18(u^2 + Y) - 27."""
    r2 = u**2 + ysq
    return r2**2 - 8 * (u**3 - 3 * u * ysq) + 18 * r2 - 27


def prop35_script(method: str = "both", cache: dict | None = None) -> ScriptResult:
    """4 <= n1 <= 9: W_A turns regular elliptic while W_B is still loxodromic."""
    s = _Script("prop35", method, cache)
    x, y, z, A, P, B = C.x, C.y, C.z, C.A, C.P, C.B
    chain = C.chain4()

    s.positive("t_WA > -1, i.e. B + 4P > 0", B + 4 * P, chain)
    s.identity("4P - B = 1 - (z - 2xy)^2", 4 * P - B, 1 - (z - 2 * x * y) ** 2)
    s.positive("t_WA <= 1, i.e. 4P - B >= 0 on the chain", 4 * P - B, chain, strict=False)
    s.identity("4P (t_M - t_WA) = g1", 2 * (x**2 + y**2 + z**2 - 1) - B, C.g1)
    s.claim("L43_1", "t_WA <= t_M, so t_WA lies on the path")

    # first case: cos(pi/4) <= r1 <= cos(pi/8)
    start = -8 * P - 4 * (x**2 + y**2 + z**2) + 3
    tau0 = start.enclose(chain.ranges(), chain.squares())
    s.interval("trace at t = -1 is below -3/2", tau0.certainly_lt(F(-3, 2)),
               f"trace(-1) <= {tau0.hi:.6f} < -3/2")
    cth = Poly.var("c")
    s.identity("Re(deltoid) + 3/2 = 2 (cos(theta) + 1/2)^2",
               2 * cth + (2 * cth**2 - 1) + F(3, 2), 2 * (cth + F(1, 2)) ** 2)
    s.deduce("W_B is not regular elliptic while Re(trace) < -3/2, i.e. before t_B", True,
             "the closed deltoid region lies in Re >= -3/2")
    s.identity("16P (t_B - t_WA) = g2", 2 * A - 3 - 4 * B, C.g2)
    s.claim("L43_2", "t_WA < t_B for cos(pi/4) <= r1 <= cos(pi/8)")

    # second case: r1 = cos(pi/9); the line y = (3 sqrt 3 / 5)(1 - u)
    u = Poly.var("u")
    on_line = _goldman_poly(u, F(27, 25) * (1 - u) ** 2)
    s.identity("f on the line equals (4/625)(2u + 3)^2 (169u^2 - 158u - 111)", on_line,
               F(4, 625) * (2 * u + 3) ** 2 * (169 * u**2 - 158 * u - 111))
    x1 = C.x1_enclosure()
    root = 169 * x1.sqr() - 158 * x1 - 111
    s.interval("x1 = (79 - 50 sqrt 10) / 169 is a root", root.contains(0),
               f"x1 in [{x1.lo!r}, {x1.hi!r}]")
    a, p = Poly.vars("a", "p")
    s.identity("circle/line quadratic: 25(u + a)^2 + 27(1 - u)^2 - 25(8p)^2",
               25 * (u + a) ** 2 + 27 * (1 - u) ** 2 - 25 * (8 * p) ** 2,
               52 * u**2 + 2 * (25 * a - 27) * u + 25 * (a**2 - (8 * p) ** 2) + 27)
    d2 = (2 * (25 * a - 27)) ** 2 - 4 * 52 * (25 * (a**2 - (8 * p) ** 2) + 27)
    g3_ap = -27 * a**2 - 54 * a + 52 * (8 * p) ** 2 - 27
    s.identity("D2 = 100 g3", d2, 100 * g3_ap)
    s.claim("L43_3", "D2 = 100 g3 > 0")
    s.claim("inline_35", "-50A + 210 < 0")
    s.deduce("x2 < -3/2, i.e. sqrt(D2) > -50A + 210", True, "-50A + 210 < 0 <= sqrt(D2)")
    s.identity("x(t_WA) = 2B - A", 8 * P * B - 4 * P * A, 4 * P * (2 * B - A))
    s.identity("y(t_WA)^2 = 4(16P^2 - B^2)", (8 * P) ** 2 * (16 * P**2) - (8 * P) ** 2 * B**2,
               16 * P**2 * 4 * (16 * P**2 - B**2))
    s.claim("L43_4", "x_WA - x1 = g4 < -0.9 < 0")
    W = 2 * y**2 * (1 - 2 * x**2) + 2 * x**2 + z**2
    s.identity("1 - x_WA = 2W", 1 - (2 * B - A), 2 * W)
    s.positive("W > 0 at r1 = cos(pi/9)", W, C.slab9())
    s.identity("g5 = 25(16P^2 - B^2) - 27 W^2", C.g5, 25 * (16 * P**2 - B**2) - 27 * W**2)
    s.claim("L43_5", "g5 > 0.2 > 0, so y_WA > (3 sqrt 3 / 5)(1 - x_WA)")

    # numerical cross-check of the closed forms at (cos(pi/9), 1, 1)
    import math

    r = (math.cos(math.pi / 9), 1.0, 1.0)
    th = thresholds(*r)
    pf = r[0] * r[1] * r[2]
    bf = r[2] ** 2 + 4 * r[0] ** 2 * r[1] ** 2 - 1
    af = 4 * sum(v * v for v in r) - 3
    x_wa = 2 * bf - af
    y_wa = 2 * math.sqrt((4 * pf) ** 2 - bf**2)
    x_path = x_of_t(th.t_WA, *r)
    y_path = 8 * pf * math.sqrt(1 - th.t_WA**2)
    err = max(abs(x_wa - x_path), abs(y_wa - y_path), abs((x_wa + af) ** 2 + y_wa**2 - (8 * pf) ** 2))
    s.interval("closed forms for (x_WA, y_WA) agree with the path at (cos(pi/9), 1, 1)", err < 1e-12,
               f"max deviation {err:.2e}")
    s.result.enclosures.update({"x1": x1, "trace_at_start_upper": tau0})
    s.result.conclusion = "W_A turns regular elliptic while W_B is loxodromic: type A"
    return s.result


SCRIPTS = {"prop31": prop31_script, "prop35": prop35_script}
