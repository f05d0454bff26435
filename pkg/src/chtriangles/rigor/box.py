"""Boxes with labelled endpoints and an optional ordering chain."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cosine import cos_pi_over, cos_sq_pi_over
from .interval import Interval


@dataclass(frozen=True)
class Endpoint:
    """A real number known through an enclosure.

    Two endpoints with the same label denote the same real number, which lets
    domain bookkeeping compare, e.g., an upper bound ``cos(pi/8)`` with a lower
    bound ``cos(pi/8)`` exactly.  ``square`` encloses the square of the number
    and may be exact where the enclosure itself is not (``cos(pi/4)**2 = 1/2``).
    """

    label: str
    value: Interval
    square: Interval | None = None

    @classmethod
    def exact(cls, q) -> "Endpoint":
        q = Fraction(q)
        return cls(str(q), Interval.exact(q), Interval.exact(q * q))

    @classmethod
    def cos_pi(cls, n) -> "Endpoint":
        if n == math.inf:
            return cls.exact(1)
        return cls(f"cos(pi/{n})", cos_pi_over(n), cos_sq_pi_over(n))

    @classmethod
    def of(cls, x) -> "Endpoint":
        if isinstance(x, Endpoint):
            return x
        if isinstance(x, float):
            return cls(repr(x), Interval(x), Interval(x).sqr())
        return cls.exact(x)

    def certainly_le(self, other: "Endpoint") -> bool:
        return self.label == other.label or self.value.hi <= other.value.lo

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Box:
    """Per-variable closed ranges plus an optional chain v1 <= v2 <= ... .

    A variable whose two endpoints coincide is pinned: it is carried as a thin
    enclosure and never split.
    """

    lo: dict
    hi: dict
    chain: tuple = ()
    order: tuple = field(default=())

    def __post_init__(self):
        lo = {v: Endpoint.of(e) for v, e in self.lo.items()}
        hi = {v: Endpoint.of(e) for v, e in self.hi.items()}
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if set(lo) != set(hi):
            raise ValueError("lower and upper bounds name different variables")
        if not self.order:
            object.__setattr__(self, "order", tuple(sorted(lo)))
        for v in self.chain:
            if v not in lo:
                raise ValueError(f"chain variable {v!r} has no range")

    @classmethod
    def cube(cls, names, lo, hi, chain=()) -> "Box":
        lo, hi = Endpoint.of(lo), Endpoint.of(hi)
        return cls({n: lo for n in names}, {n: hi for n in names}, tuple(chain), tuple(names))

    @property
    def variables(self) -> tuple:
        return self.order

    def is_pinned(self, v) -> bool:
        return self.lo[v].label == self.hi[v].label

    def range(self, v) -> Interval:
        if self.is_pinned(v):
            return self.lo[v].value
        return Interval(self.lo[v].value.lo, self.hi[v].value.hi)

    def ranges(self) -> dict:
        return {v: self.range(v) for v in self.order}

    def squares(self) -> dict:
        out = {}
        for v in self.order:
            a, b = self.lo[v], self.hi[v]
            if a.value.lo < 0:
                continue
            sa = a.square if a.square is not None else a.value.sqr()
            sb = b.square if b.square is not None else b.value.sqr()
            out[v] = Interval(sa.lo, sb.hi)
        return out

    def without_chain(self) -> "Box":
        return Box(dict(self.lo), dict(self.hi), (), self.order)

    def disjoint_from_chain(self) -> bool:
        """True when no point of the box satisfies the ordering chain."""
        for a, b in zip(self.chain, self.chain[1:]):
            if self.range(a).lo > self.range(b).hi:
                return True
        return False

    def contains_point(self, point: dict) -> bool:
        """Certain membership of a point given by floats or thin enclosures."""
        for v in self.order:
            p = Interval.exact(point[v]) if not isinstance(point[v], Interval) else point[v]
            if self.is_pinned(v):
                if p != self.lo[v].value:
                    return False
                continue
            if p.lo < self.lo[v].value.hi and p != self.lo[v].value:
                return False
            if p.hi > self.hi[v].value.lo and p != self.hi[v].value:
                return False
        for a, b in zip(self.chain, self.chain[1:]):
            pa, pb = Interval.exact(point[a]), Interval.exact(point[b])
            if not (pa.hi <= pb.lo or pa == pb):
                return False
        return True

    def describe(self) -> dict:
        return {
            "variables": {v: [str(self.lo[v]), str(self.hi[v])] for v in self.order},
            "chain": list(self.chain),
        }
