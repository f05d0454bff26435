"""Run registered claims through one or both certification strategies."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..errors import PlanUnsound
from ..rigor.bnb import Inconclusive, ProofOutcome, Proved, prove_positive
from ..rigor.interval import Interval
from ..rigor.monotone import monotone_corner_bound, threshold_cleared
from . import claims as _claims
from .claims import Claim
from .plans import PLANS

METHODS = ("monotone", "bnb", "both")


@dataclass
class ClaimResult:
    claim: Claim
    method: str
    outcomes: dict = field(default_factory=dict)  # (side, strategy) -> ProofOutcome
    elapsed: float = 0.0

    @property
    def proved(self) -> bool:
        return bool(self.outcomes) and all(o.proved for o in self.outcomes.values())

    @property
    def outcome(self) -> ProofOutcome:
        """The first failing outcome, or the first one when everything is proved."""
        for o in self.outcomes.values():
            if not o.proved:
                return o
        return next(iter(self.outcomes.values()))

    def bound(self, side: str) -> Interval | None:
        o = self.outcomes.get((side, "monotone"))
        return o.bound if isinstance(o, Proved) else None

    def summary(self) -> dict:
        out = {"claim": self.claim.name, "relation": self.claim.relation(), "method": self.method,
               "proved": self.proved, "seconds": round(self.elapsed, 3), "sides": {}}
        for (side, strategy), o in self.outcomes.items():
            entry = {"status": o.status}
            if isinstance(o, Proved) and o.bound is not None:
                entry["bound"] = [repr(o.bound.lo), repr(o.bound.hi)]
            if isinstance(o, Proved) and strategy == "bnb":
                entry["leaves"] = o.leaves
            if isinstance(o, Inconclusive):
                entry["reason"] = o.reason
            if hasattr(o, "witness"):
                entry["witness"] = o.witness
            out["sides"].setdefault(side, {})[strategy] = entry
        return out


def _sides(claim: Claim):
    if claim.lower is not None:
        yield "lower", claim.lower
    if claim.upper is not None:
        yield "upper", claim.upper


def _bnb_side(claim: Claim, side: str, bound, max_depth: int, max_boxes: int) -> ProofOutcome:
    offset = claim.offset
    if side == "lower":
        return prove_positive(claim.expr, claim.box, bound.threshold, max_depth,
                              strict=bound.strict, constant=offset, max_boxes=max_boxes)
    return prove_positive(-claim.expr, claim.box, -bound.threshold, max_depth,
                          strict=bound.strict, constant=-offset if offset is not None else None,
                          max_boxes=max_boxes)


def _monotone_side(claim: Claim, side: str, bound) -> ProofOutcome:
    plan = PLANS.get((claim.name, side))
    if plan is None:
        return Inconclusive("monotone", reason=f"no plan registered for {claim.name} ({side})")
    kind = "min" if side == "lower" else "max"
    try:
        result = monotone_corner_bound(claim.expr, claim.box, plan, kind)
    except PlanUnsound as exc:
        return Inconclusive("monotone", reason=f"plan unsound at {exc.node or '/'}: {exc}")
    value = result.bound if claim.offset is None else result.bound + claim.offset
    result.bound = value
    if threshold_cleared(value, bound.threshold, kind, bound.strict):
        return result
    return Inconclusive("monotone", reason=f"certified {kind} [{value.lo!r}, {value.hi!r}] "
                                           f"does not clear {bound.threshold}",
                        lower=value.lo)


def run_claim(claim: str | Claim, method: str = "both", max_depth: int = 40,
              max_boxes: int = 10**6) -> ClaimResult:
    """Certify every side of ``claim``; ``both`` runs the two strategies and needs both to agree."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if isinstance(claim, str):
        claim = _claims.get(claim)
    result = ClaimResult(claim, method)
    start = time.perf_counter()
    for side, bound in _sides(claim):
        if method in ("monotone", "both"):
            result.outcomes[(side, "monotone")] = _monotone_side(claim, side, bound)
        if method in ("bnb", "both"):
            result.outcomes[(side, "bnb")] = _bnb_side(claim, side, bound, max_depth, max_boxes)
    result.elapsed = time.perf_counter() - start
    return result
