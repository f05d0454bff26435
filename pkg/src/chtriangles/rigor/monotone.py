"""Monotone-corner certificates.

A plan walks a polynomial down to the corner where its extremum sits.  Each
step fixes one variable after proving the sign of the corresponding partial
derivative with a nested plan, so the argument has the same shape as a
hand proof by "taking derivatives": prove the derivative positive, move to
the lower end, repeat.

A variable can be moved to an end of its range, or, inside an ordering chain,
onto a neighbour (``x <= y`` and increasing in ``x`` means the minimum has
``x = y``); the second case is an exact substitution.  ``Split`` cuts the
range of one variable at given points and combines the part bounds, and
``Direct`` finishes with a plain interval enclosure over whatever is left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PlanUnsound
from .bnb import Proved
from .box import Box, Endpoint
from .interval import Interval
from .poly import Poly


@dataclass(frozen=True)
class Direct:
    note: str = ""


@dataclass(frozen=True)
class Fix:
    """Move ``var`` to ``to`` ("lo", "hi", or a chain neighbour), then continue with ``then``.

    ``why`` is the plan bounding the partial derivative (divided by the
    positive monomial ``factor`` when one is given).
    """

    var: str
    to: str
    then: object = field(default_factory=Direct)
    why: object = field(default_factory=Direct)
    factor: Poly | None = None
    note: str = ""


@dataclass(frozen=True)
class Split:
    var: str
    at: tuple
    parts: tuple
    note: str = ""


def _prune_chain(box: Box) -> Box:
    chain = list(box.chain)
    while len(chain) >= 2 and box.hi[chain[0]].certainly_le(box.lo[chain[1]]):
        chain.pop(0)
    while len(chain) >= 2 and box.hi[chain[-2]].certainly_le(box.lo[chain[-1]]):
        chain.pop()
    if len(chain) < 2:
        chain = []
    return Box(dict(box.lo), dict(box.hi), tuple(chain), box.order)


def _pin(box: Box, v: str, end: Endpoint) -> Box:
    lo, hi = dict(box.lo), dict(box.hi)
    lo[v] = hi[v] = end
    return _prune_chain(Box(lo, hi, box.chain, box.order))


def _drop(box: Box, v: str) -> Box:
    lo = {k: e for k, e in box.lo.items() if k != v}
    hi = {k: e for k, e in box.hi.items() if k != v}
    chain = tuple(c for c in box.chain if c != v)
    order = tuple(c for c in box.order if c != v)
    return _prune_chain(Box(lo, hi, chain if len(chain) >= 2 else (), order))


def _restrict(box: Box, v: str, lo: Endpoint, hi: Endpoint) -> Box:
    los, his = dict(box.lo), dict(box.hi)
    los[v], his[v] = lo, hi
    return _prune_chain(Box(los, his, box.chain, box.order))


def _enclose(p: Poly, box: Box) -> Interval:
    if p.is_constant():
        return Interval.exact(p.constant_value())
    return p.enclose(box.ranges(), box.squares())


class _Run:
    def __init__(self):
        self.nodes = []

    def record(self, path, kind, p_box, **info):
        entry = {"path": path, "kind": kind, "domain": p_box.describe()}
        entry.update(info)
        self.nodes.append(entry)

    def bound(self, p: Poly, box: Box, plan, kind: str, path: str) -> Interval:
        if isinstance(plan, Direct):
            val = _enclose(p, box)
            self.record(path, "direct", box, value=[repr(val.lo), repr(val.hi)], note=plan.note)
            return val
        if isinstance(plan, Split):
            return self._split(p, box, plan, kind, path)
        if isinstance(plan, Fix):
            return self._fix(p, box, plan, kind, path)
        raise PlanUnsound(f"unknown plan node {plan!r}", path)

    def _split(self, p, box, plan: Split, kind, path):
        v = plan.var
        points = [box.lo[v]] + [Endpoint.of(a) for a in plan.at] + [box.hi[v]]
        if len(plan.parts) != len(points) - 1:
            raise PlanUnsound(f"split of {v} needs {len(points) - 1} parts", path)
        for a, b in zip(points, points[1:]):
            if not a.certainly_le(b):
                raise PlanUnsound(f"split points of {v} are not ordered inside its range", path)
        bounds = []
        for i, (a, b, sub) in enumerate(zip(points, points[1:], plan.parts)):
            bounds.append(self.bound(p, _restrict(box, v, a, b), sub, kind, f"{path}/{v}[{i}]"))
        if kind == "min":
            out = Interval(min(b.lo for b in bounds), min(b.hi for b in bounds))
        else:
            out = Interval(max(b.lo for b in bounds), max(b.hi for b in bounds))
        self.record(path, "split", box, var=v, at=[str(Endpoint.of(a)) for a in plan.at], note=plan.note)
        return out

    def _fix(self, p, box, plan: Fix, kind, path):
        v, to = plan.var, plan.to
        if v not in box.variables:
            raise PlanUnsound(f"{v} is not a free variable here", path)
        if box.is_pinned(v):
            if to not in ("lo", "hi"):
                raise PlanUnsound(f"{v} is pinned and cannot move onto {to}", path)
            self.record(path, "fix", box, var=v, to=to, derivative_sign="pinned", note=plan.note)
            return self.bound(p, box, plan.then, kind, f"{path}/{v}={to}")
        chain = box.chain
        idx = chain.index(v) if v in chain else None
        if to in ("lo", "hi"):
            direction = to
            if idx is not None:
                if to == "lo" and idx > 0:
                    raise PlanUnsound(f"lower end of {v} is bounded by {chain[idx - 1]}", path)
                if to == "hi" and idx < len(chain) - 1:
                    raise PlanUnsound(f"upper end of {v} is bounded by {chain[idx + 1]}", path)
        else:
            if idx is None or to not in chain:
                raise PlanUnsound(f"{to} is not a chain neighbour of {v}", path)
            j = chain.index(to)
            if j == idx + 1:
                direction = "hi"
                ok = box.lo[v].certainly_le(box.lo[to]) and box.hi[to].certainly_le(box.hi[v])
            elif j == idx - 1:
                direction = "lo"
                ok = box.lo[v].certainly_le(box.lo[to]) and box.hi[to].certainly_le(box.hi[v])
            else:
                raise PlanUnsound(f"{to} is not adjacent to {v} in the chain", path)
            if not ok:
                raise PlanUnsound(f"range of {to} is not inside the range of {v}", path)
        # the extremum moves to `direction` when the derivative has the matching sign
        want_nonneg = (kind == "min") == (direction == "lo")
        d = p.partial(v) if v in p.variables else Poly()
        if plan.factor is not None:
            fac = _enclose(plan.factor, box)
            if not fac.lo > 0:
                raise PlanUnsound(f"factor {plan.factor!r} is not positive", path)
            d = d.divide_monomial(plan.factor)
        sub_kind = "min" if want_nonneg else "max"
        db = self.bound(d, box, plan.why, sub_kind, f"{path}/d{v}")
        certified = db.lo >= 0 if want_nonneg else db.hi <= 0
        sign = ">= 0" if want_nonneg else "<= 0"
        self.record(path, "fix", box, var=v, to=to, derivative_sign=sign,
                    derivative_bound=[repr(db.lo), repr(db.hi)], note=plan.note)
        if not certified:
            raise PlanUnsound(f"d/d{v} {sign} not certified: bound [{db.lo!r}, {db.hi!r}]", path)
        if to in ("lo", "hi"):
            end = box.lo[v] if to == "lo" else box.hi[v]
            nxt = _pin(box, v, end)
        else:
            p = p.substitute({v: Poly.var(to)})
            nxt = _drop(box, v)
        return self.bound(p, nxt, plan.then, kind, f"{path}/{v}={to}")


def monotone_corner_bound(p: Poly, box: Box, plan, kind: str = "min") -> Proved:
    """Run ``plan`` and return the certified extreme value of p over ``box``.

    Raises PlanUnsound naming the failing node when a derivative sign cannot
    be certified.
    """
    if kind not in ("min", "max"):
        raise ValueError("kind must be 'min' or 'max'")
    run = _Run()
    val = run.bound(p, box, plan, kind, "")
    cert = {"method": "monotone", "kind": kind, "nodes": run.nodes}
    return Proved("monotone", certificate=cert, bound=val)


def threshold_cleared(bound: Interval, threshold, kind: str, strict: bool) -> bool:
    t = Interval.exact(Fraction(threshold))
    if kind == "min":
        return bound.lo > t.hi if strict else bound.lo >= t.hi
    return bound.hi < t.lo if strict else bound.hi <= t.lo
