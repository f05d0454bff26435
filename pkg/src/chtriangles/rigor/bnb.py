"""Branch-and-bound positivity certification over boxes.

Boxes are bisected along their widest free variable until every leaf either
misses the constraint set or has an interval lower bound above the threshold.
Lower bounds combine the natural Horner enclosure with the mean-value form,
after first pinning every variable in which the polynomial is certifiably
monotone on the leaf.

Ordering chains v1 <= ... <= vk are handled by rewriting the chain variables
in gap coordinates (vk = U - s_k, v_i = v_{i+1} - s_i, all s >= 0), an exact
rational substitution.  The feasible set becomes a simplex inside the gap box,
and leaves disjoint from that simplex are pruned.  Corners where a claim holds
with equality and the chain is active (g1 at (1,1,1)) become box corners in
gap coordinates, where monotone pinning makes them exact point evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .box import Box
from .interval import Interval
from .poly import Poly


@dataclass
class ProofOutcome:
    method: str

    @property
    def proved(self) -> bool:
        return isinstance(self, Proved)

    @property
    def status(self) -> str:
        return type(self).__name__


@dataclass
class Proved(ProofOutcome):
    certificate: dict = field(default_factory=dict)
    bound: Interval | None = None  # certified extreme value, when the method yields one
    leaves: int = 0


@dataclass
class Refuted(ProofOutcome):
    witness: dict = field(default_factory=dict)  # variable -> float
    value: Interval | None = None  # enclosure of (expression - threshold) at the witness


@dataclass
class Inconclusive(ProofOutcome):
    reason: str = ""
    worst_box: dict = field(default_factory=dict)
    lower: float = float("nan")


class _Var:
    """Endpoint enclosures, a square enclosure and a pin flag for one variable."""

    __slots__ = ("lo", "hi", "sq", "pinned")

    def __init__(self, lo: Interval, hi: Interval, sq: Interval, pinned: bool = False):
        self.lo, self.hi, self.sq, self.pinned = lo, hi, sq, pinned

    @property
    def range(self) -> Interval:
        if self.pinned:
            return self.lo
        return Interval(self.lo.lo, self.hi.hi)

    def pin(self, end: Interval) -> "_Var":
        s = end.sqr()
        lo, hi = max(s.lo, self.sq.lo), min(s.hi, self.sq.hi)
        sq = Interval(lo, hi) if lo <= hi else s
        return _Var(end, end, sq, True)

    def split(self, at: float) -> tuple["_Var", "_Var"]:
        m = Interval(at)
        ms = m.sqr()
        left_sq = Interval(self.sq.lo, min(self.sq.hi, ms.hi))
        right_sq = Interval(max(self.sq.lo, ms.lo), self.sq.hi)
        if left_sq.lo > left_sq.hi:
            left_sq = Interval(self.lo.lo, at).sqr()
        if right_sq.lo > right_sq.hi:
            right_sq = Interval(at, self.hi.hi).sqr()
        return _Var(self.lo, m, left_sq), _Var(m, self.hi, right_sq)


def _ranges(state):
    return {v: s.range for v, s in state.items()}


def _squares(state):
    return {v: s.sq for v, s in state.items()}


def lower_bound(p: Poly, state: dict) -> Interval:
    """Enclosure of p over the leaf whose lower end is as tight as we can make it cheaply."""
    st = dict(state)
    grad = p.gradient()
    changed = True
    while changed:
        changed = False
        for v, dp in grad.items():
            var = st[v]
            if var.pinned:
                continue
            d = dp.enclose(_ranges(st), _squares(st))
            if d.lo >= 0:
                st[v] = var.pin(var.lo)
                changed = True
            elif d.hi <= 0:
                st[v] = var.pin(var.hi)
                changed = True
    ranges, squares = _ranges(st), _squares(st)
    natural = p.enclose(ranges, squares)
    free = [v for v in p.variables if not st[v].pinned]
    if not free:
        return natural
    centre = dict(ranges)
    for v in free:
        centre[v] = Interval(ranges[v].mid)
    mv = p.enclose(centre, None)
    for v in free:
        mv = mv + grad[v].enclose(ranges, squares) * (ranges[v] - centre[v])
    lo, hi = max(natural.lo, mv.lo), min(natural.hi, mv.hi)
    return Interval(lo, hi) if lo <= hi else natural


@dataclass
class _Problem:
    poly: Poly  # in working coordinates
    shift: Interval  # added to the polynomial before comparing with zero
    strict: bool
    box: Box
    gap: dict  # chain variable -> linear Poly in gap variables (empty without chain)
    constraints: list  # (linear Poly, lower Endpoint, upper Endpoint)

    def certifies(self, enc: Interval) -> bool:
        total = enc + self.shift
        return total.lo > 0 if self.strict else total.lo >= 0

    def refutes(self, enc: Interval) -> bool:
        total = enc + self.shift
        return total.hi <= 0 if self.strict else total.hi < 0


def _setup(p: Poly, box: Box, threshold, strict: bool, constant: Interval | None):
    shift = -Interval.exact(threshold)
    if constant is not None:
        shift = shift + constant
    missing = set(p.variables) - set(box.variables)
    if missing:
        from ..errors import VariableMismatch

        raise VariableMismatch(f"box lacks variables {sorted(missing)}")
    state = {}
    squares = box.squares()
    chain = tuple(box.chain)
    gap, constraints = {}, []
    if chain:
        top = box.hi[chain[-1]]
        if not top.value.is_thin():
            raise ValueError("the top of an ordering chain needs an exactly representable upper bound")
        upper = Fraction(top.value.lo)
        run = Poly.const(upper)
        for v in reversed(chain):
            run = run - Poly.var(f"s_{v}")
            gap[v] = run
        lo_min = min(box.lo[v].value.lo for v in chain)
        span = Interval(top.value.lo) - Interval(lo_min)
        for v in chain:
            state[f"s_{v}"] = _Var(Interval(0.0), Interval(span.hi), Interval(0.0, Interval(span.hi).sqr().hi))
            constraints.append((gap[v], box.lo[v], box.hi[v]))
        p = p.substitute(gap)
    for v in box.variables:
        if v in gap:
            continue
        lo, hi = box.lo[v].value, box.hi[v].value
        sq = squares.get(v, box.range(v).sqr())
        state[v] = _Var(lo, hi, sq, box.is_pinned(v))
    return _Problem(p, shift, strict, box, gap, constraints), state


def _infeasible(prob: _Problem, state) -> bool:
    if not prob.constraints:
        return False
    ranges = _ranges(state)
    for lin, lo, hi in prob.constraints:
        val = lin.enclose(ranges)
        if val.hi < lo.value.lo or val.lo > hi.value.hi:
            return True
    return False


def _to_original(prob: _Problem, point: dict) -> dict:
    out = {}
    for v in prob.box.variables:
        if v in prob.gap:
            out[v] = prob.gap[v].enclose(point)
        else:
            out[v] = point[v]
    return out


def _candidates(state):
    """Leaf corners (as endpoint enclosures) followed by the centre."""
    names = list(state)
    corners = [{}]
    for v in names:
        s = state[v]
        ends = [s.lo] if s.pinned else [s.lo, s.hi]
        corners = [dict(c, **{v: e}) for c in corners for e in ends]
    centre = {v: (state[v].lo if state[v].pinned else Interval(state[v].range.mid)) for v in names}
    return corners + [centre]


def _witness(prob: _Problem, state):
    best = None
    for cand in _candidates(state):
        orig = _to_original(prob, cand)
        if not prob.box.contains_point(orig):
            continue
        enc = prob.poly.enclose(cand)
        if prob.refutes(enc) and (best is None or enc.hi < best[1].hi):
            best = (orig, enc)
    return best


def _describe(state) -> dict:
    return {v: [repr(s.range.lo), repr(s.range.hi)] for v, s in state.items()}


def prove_positive(
    p: Poly,
    box: Box,
    threshold=0,
    max_depth: int = 40,
    *,
    strict: bool = True,
    constant: Interval | None = None,
    max_boxes: int = 10**6,
    keep_tree: bool = True,
) -> ProofOutcome:
    """Certify p + constant > threshold (or >= when ``strict`` is False) on ``box``."""
    prob, root = _setup(p, box, threshold, strict, constant)
    tree = {"box": _describe(root)}
    stack = [(root, 0, tree)]
    visited = leaves = 0
    worst = None
    while stack:
        state, depth, node = stack.pop()
        visited += 1
        if _infeasible(prob, state):
            node["leaf"] = "infeasible"
            leaves += 1
            continue
        enc = lower_bound(prob.poly, state)
        if prob.certifies(enc):
            node["leaf"] = "certified"
            node["lower"] = repr((enc + prob.shift).lo)
            leaves += 1
            continue
        found = _witness(prob, state)
        if found is not None:
            orig, val = found
            return Refuted(
                "bnb",
                witness={v: (x.mid if isinstance(x, Interval) else float(x)) for v, x in orig.items()},
                value=val + prob.shift,
            )
        free = [v for v, s in state.items() if not s.pinned]
        if depth >= max_depth or visited >= max_boxes or not free:
            low = (enc + prob.shift).lo
            if worst is None or low < worst[1]:
                worst = (_describe(state), low)
            node["leaf"] = "open"
            if visited >= max_boxes:
                break
            continue
        v = max(free, key=lambda name: state[name].range.width)
        at = state[v].range.mid
        left, right = state[v].split(at)
        sl, sr = dict(state), dict(state)
        sl[v], sr[v] = left, right
        node["split"] = {"var": v, "at": repr(at)}
        node["children"] = [{"box": _describe(sl)}, {"box": _describe(sr)}] if keep_tree else [{}, {}]
        stack.append((sr, depth + 1, node["children"][1]))
        stack.append((sl, depth + 1, node["children"][0]))
    if worst is not None or stack:
        box_desc, low = worst if worst is not None else (_describe(stack[-1][0]), float("nan"))
        reason = "box budget exhausted" if visited >= max_boxes else "depth exhausted"
        return Inconclusive("bnb", reason=reason, worst_box=box_desc, lower=low)
    cert = {
        "method": "bnb",
        "coordinates": "gap" if prob.gap else "box",
        "gap_map": {v: repr(lin) for v, lin in prob.gap.items()},
        "threshold": str(Fraction(threshold)),
        "strict": strict,
        "tree": tree if keep_tree else None,
    }
    return Proved("bnb", certificate=cert, leaves=leaves)


def recheck(p: Poly, box: Box, certificate: dict, threshold=0, *, strict: bool = True, constant: Interval | None = None) -> bool:
    """Re-verify a subdivision certificate by replaying its splits with fresh interval evaluation."""
    prob, root = _setup(p, box, threshold, strict, constant)
    stack = [(root, certificate["tree"])]
    while stack:
        state, node = stack.pop()
        if "split" in node:
            v = node["split"]["var"]
            at = float(node["split"]["at"])
            if v not in state or state[v].pinned or not (state[v].range.lo < at < state[v].range.hi):
                return False
            left, right = state[v].split(at)
            sl, sr = dict(state), dict(state)
            sl[v], sr[v] = left, right
            stack.append((sl, node["children"][0]))
            stack.append((sr, node["children"][1]))
            continue
        kind = node.get("leaf")
        if kind == "infeasible":
            if not _infeasible(prob, state):
                return False
        elif kind == "certified":
            if not prob.certifies(lower_bound(prob.poly, state)):
                return False
        else:
            return False
    return True
