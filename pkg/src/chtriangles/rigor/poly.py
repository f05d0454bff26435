"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is stored as a tuple of ``(variable, exponent)`` pairs sorted by
variable name, so two polynomials are equal exactly when their term maps are.
Interval evaluation uses a Horner scheme that splits every level into even
and odd parts in that variable; the even part is evaluated in the square of
the variable, for which a box may supply a tighter (or exact) range.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import VariableMismatch
from .interval import Interval

Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("terms", "_compiled", "_grad")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[m] = c
        self.terms = clean
        self._compiled = {}
        self._grad = None

    # -- construction --------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def vars(cls, *names: str) -> tuple["Poly", ...]:
        return tuple(cls.var(n) for n in names)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        if isinstance(other, float):
            return Poly.const(Fraction(other))
        return NotImplemented

    # -- ring operations -------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, 0) + c
        return Poly(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return Poly(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({m: c / Fraction(other) for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- inspection ------------------------------------------------------------
    @property
    def variables(self) -> tuple[str, ...]:
        names = {v for m in self.terms for v, _ in m}
        return tuple(sorted(names))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def degree_in(self, v: str) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=0)

    def is_even_in(self, v: str) -> bool:
        return all(dict(m).get(v, 0) % 2 == 0 for m in self.terms)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        key = tuple(sorted((v, e) for v, e in monomial.items() if e))
        return self.terms.get(key, Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda it: (-sum(e for _, e in it[0]), it[0])):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return "Poly(" + " + ".join(parts).replace("+ -", "- ") + ")"

    # -- calculus and substitution ---------------------------------------------
    def partial(self, v: str) -> "Poly":
        if v not in self.variables and not self.is_constant():
            raise VariableMismatch(f"{v!r} is not a variable of {self!r}")
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if e == 0:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = tuple(sorted(d.items()))
            t[key] = t.get(key, 0) + c * e
        return Poly(t)

    def gradient(self) -> dict[str, "Poly"]:
        if self._grad is None:
            self._grad = {v: self.partial(v) for v in self.variables}
        return self._grad

    def substitute(self, mapping: Mapping[str, "Poly | int | Fraction"]) -> "Poly":
        """Compose: replace each mapped variable by a polynomial or rational."""
        subs = {v: self._lift(p) for v, p in mapping.items()}
        power_cache: dict[tuple[str, int], Poly] = {}

        def power(v, e):
            key = (v, e)
            if key not in power_cache:
                power_cache[key] = subs[v] ** e
            return power_cache[key]

        result: dict = {}
        for m, c in self.terms.items():
            kept = tuple((v, e) for v, e in m if v not in subs)
            acc = Poly({kept: c})
            for v, e in m:
                if v in subs:
                    acc = acc * power(v, e)
            for mm, cc in acc.terms.items():
                result[mm] = result.get(mm, 0) + cc
        return Poly(result)

    def divide_monomial(self, other: "Poly") -> "Poly":
        """Exact quotient by a single-term polynomial; raises if not divisible."""
        if len(other.terms) != 1:
            raise ValueError("divisor must be a single term")
        (dm, dc), = other.terms.items()
        dd = dict(dm)
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            for v, e in dd.items():
                if d.get(v, 0) < e:
                    raise ValueError(f"{self!r} is not divisible by {other!r}")
                d[v] -= e
                if d[v] == 0:
                    del d[v]
            t[tuple(sorted(d.items()))] = c / dc
        return Poly(t)

    # -- evaluation -------------------------------------------------------------
    def eval_exact(self, point: Mapping[str, Fraction | int]) -> Fraction:
        missing = set(self.variables) - set(point)
        if missing:
            raise VariableMismatch(f"no value for {sorted(missing)}")
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= Fraction(point[v]) ** e
            total += term
        return total

    def eval_float(self, point: Mapping[str, float]) -> float:
        total = 0.0
        for m, c in self.terms.items():
            term = float(c)
            for v, e in m:
                term *= point[v] ** e
            total += term
        return total

    def enclose(self, ranges: Mapping[str, Interval], squares: Mapping[str, Interval] | None = None) -> Interval:
        """Sound enclosure of the range over the product of `ranges`.

        ``squares`` optionally gives, per variable, an enclosure of the range of
        its square that is tighter than squaring the variable's interval.
        """
        missing = set(self.variables) - set(ranges)
        if missing:
            raise VariableMismatch(f"box lacks variables {sorted(missing)}")
        order = self.variables
        tree = self._compiled.get(order)
        if tree is None:
            tree = _compile(self.terms, order, 0)
            self._compiled[order] = tree
        sq = {}
        for v in order:
            s = ranges[v].sqr()
            if squares and v in squares:
                s = Interval(max(s.lo, squares[v].lo), min(s.hi, squares[v].hi))
            sq[v] = s
        return _horner(tree, ranges, sq)


def _compile(terms: Mapping[Monomial, Fraction], order: tuple[str, ...], level: int):
    if level == len(order):
        c = sum(terms.values(), Fraction(0))
        return Interval.exact(c)
    v = order[level]
    by_exp: dict[int, dict] = {}
    for m, c in terms.items():
        d = dict(m)
        e = d.pop(v, 0)
        by_exp.setdefault(e, {})[tuple(sorted(d.items()))] = c
    top = max(by_exp)
    even = [_compile(by_exp[2 * j], order, level + 1) if 2 * j in by_exp else None for j in range(top // 2 + 1)]
    odd = [_compile(by_exp[2 * j + 1], order, level + 1) if 2 * j + 1 in by_exp else None for j in range((top + 1) // 2)]
    return (v, even, odd)


def _horner_list(coeffs, ranges, sq, s: Interval):
    acc = None
    for node in reversed(coeffs):
        if acc is not None:
            acc = acc * s
        if node is not None:
            val = _horner(node, ranges, sq)
            acc = val if acc is None else acc + val
    return acc if acc is not None else Interval(0.0)


def _horner(node, ranges, sq):
    if isinstance(node, Interval):
        return node
    v, even, odd = node
    s = sq[v]
    result = _horner_list(even, ranges, sq, s) if even and any(n is not None for n in even) else None
    if odd and any(n is not None for n in odd):
        o = ranges[v] * _horner_list(odd, ranges, sq, s)
        result = o if result is None else result + o
    return result if result is not None else Interval(0.0)
