"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import typeclass
from .errors import ChTriangleError, DomainError, ScriptStepFailed, UnknownClaim
from .figure import render_svg
from .isometry import goldman_f, trace_WB
from .oracle import run_oracle
from .triangle import TriangleAngles, format_n, thresholds
from .verifier import claims as registry
from .verifier.runner import METHODS, run_claim
from .verifier.scripts import SCRIPTS

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SCAN_HEADER = ("n1", "n2", "n3", "verdict", "t_wa_onset", "t_wb_onset", "t_max")
PATH_HEADER = ("t", "x", "y", "f")


class UsageError(Exception):
    pass


def fmt(v) -> str:
    """17 significant digits; empty for a missing value."""
    if v is None:
        return ""
    return "%.17g" % v


def _triple(ns) -> TriangleAngles:
    try:
        return TriangleAngles.of(*ns)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _n_json(n):
    return "inf" if n == math.inf else n


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8", newline="")
    except OSError as exc:
        raise IOError(f"cannot write {out}: {exc}") from exc


def _table(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- classify / scan -----------------------------------------------------

def _verdict_record(angles, v, grid=None, tol=None) -> dict:
    rec = {
        "triple": [_n_json(n) for n in angles],
        "verdict": v.verdict.value,
        "t_WA_onset": v.report.t_WA_onset,
        "t_WB_onset": v.report.t_WB_onset,
        "t_max": v.report.t_max,
    }
    if grid is not None:
        rec["grid"] = grid
        rec["tol"] = tol
    return rec


def cmd_classify(args) -> int:
    angles = _triple(args.n)
    v = typeclass.classify_triple(angles, args.grid, args.tol)
    print(json.dumps(_verdict_record(angles, v, args.grid, args.tol)))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    rows = typeclass.scan(args.n_max, args.include_infinity, args.grid, args.tol, args.workers)
    if args.format == "json":
        text = json.dumps([_verdict_record(r.angles, r.result) for r in rows], indent=1) + "\n"
    else:
        text = _table(SCAN_HEADER, (
            [*(format_n(n) for n in r.angles), r.result.verdict.value,
             fmt(r.result.report.t_WA_onset), fmt(r.result.report.t_WB_onset), fmt(r.result.report.t_max)]
            for r in rows))
    _write(text, args.out)
    return EXIT_OK


# --- path / figure -------------------------------------------------------

def path_samples(angles: TriangleAngles, k: int) -> list[tuple[float, float, float, float]]:
    if k < 2:
        raise UsageError("--samples must be at least 2")
    r = angles.radii()
    t_max = thresholds(*r).t_max
    if t_max <= -1 + 1e-12:
        raise UsageError(f"{angles} is rigid: the path is a single point")
    out = []
    for i in range(k):
        t = -1.0 + (t_max + 1.0) * i / (k - 1) if i < k - 1 else t_max
        z = trace_WB(*r, t)
        out.append((t, z.real, z.imag, goldman_f(z)))
    return out


def cmd_path(args) -> int:
    rows = path_samples(_triple(args.n), args.samples)
    _write(_table(PATH_HEADER, ([fmt(v) for v in row] for row in rows)), args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    angles = _triple(args.n)
    try:
        svg = render_svg(angles)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    _write(svg, args.out)
    return EXIT_OK


# --- verify --------------------------------------------------------------

def _parse_overrides(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--threshold expects NAME=VALUE or NAME.side=VALUE, got {item!r}")
        name, _, side = name.partition(".")
        if side not in ("", "lower", "upper"):
            raise UsageError(f"side must be lower or upper, got {side!r}")
        try:
            out[name] = (Fraction(value), side or None)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad threshold {value!r}") from None
    return out


def _selection(selection: str):
    if selection == "all":
        return registry.names() + list(registry.DEDUCTIONS), list(SCRIPTS)
    wanted = [s.strip() for s in selection.split(",") if s.strip()]
    claims, scripts = [], []
    for name in wanted:
        if name in SCRIPTS:
            scripts.append(name)
        elif name in registry.DEDUCTIONS:
            claims.append(name)
        else:
            registry.get(name)  # raises UnknownClaim
            claims.append(name)
    return claims, scripts


def _cert_payload(result) -> dict:
    payload = result.summary()
    payload["certificates"] = {}
    for (side, strategy), o in result.outcomes.items():
        cert = getattr(o, "certificate", None)
        if cert:
            payload["certificates"].setdefault(side, {})[strategy] = cert
    return payload


def cmd_verify(args) -> int:
    overrides = _parse_overrides(args.threshold)
    claim_names, script_names = _selection(args.claims)
    for name in overrides:
        registry.get(name)
    cert_dir = Path(args.emit_cert) if args.emit_cert else None
    if cert_dir is not None:
        try:
            cert_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise IOError(f"cannot create {cert_dir}: {exc}") from exc

    entries, cache, failures = [], {}, []
    start = time.perf_counter()
    for name in claim_names:
        if name in registry.DEDUCTIONS:
            ok, enc = registry.deduce_L41_2()
            entries.append({"claim": name, "kind": "deduction", "proved": ok,
                            "enclosure": [repr(enc.lo), repr(enc.hi)]})
            print(f"{name:<10} {'deduced' if ok else 'FAILED':<8} sqrt(4 f1) in [{enc.lo:.6f}, {enc.hi:.6f}]")
            if not ok:
                failures.append(name)
            continue
        claim = registry.get(name)
        if name in overrides:
            value, side = overrides[name]
            claim = claim.with_threshold(value, side)
        res = run_claim(claim, args.method, args.max_depth)
        if name not in overrides:
            cache[name] = res
        summary = res.summary()
        entries.append(summary)
        bounds = []
        for side in ("lower", "upper"):
            b = res.bound(side)
            if b is not None:
                bounds.append(f"{'min' if side == 'lower' else 'max'} in [{b.lo:.9g}, {b.hi:.9g}]")
        status = "proved" if res.proved else res.outcome.status
        print(f"{name:<10} {status:<8} {claim.relation():<22} {res.elapsed:7.3f}s  {'  '.join(bounds)}")
        if not res.proved:
            failures.append(name)
            detail = summary["sides"]
            print(f"           {json.dumps(detail)}")
        if cert_dir is not None:
            try:
                (cert_dir / f"{name}.json").write_text(json.dumps(_cert_payload(res), indent=1) + "\n")
            except OSError as exc:
                raise IOError(f"cannot write certificate for {name}: {exc}") from exc

    for name in script_names:
        try:
            result = SCRIPTS[name](args.method, cache)
            ok = result.passed
        except ScriptStepFailed as exc:
            result = getattr(exc, "result", None)
            ok = False
            print(f"{name:<10} FAILED   at step: {exc.step}: {exc.detail}")
        if ok:
            print(f"{name:<10} passed   {len(result.steps)} steps; {result.conclusion}")
        else:
            failures.append(name)
        entry = result.summary() if result is not None else {"script": name, "passed": False}
        entries.append(entry)

    n_claims = sum(1 for n in claim_names if n not in registry.DEDUCTIONS)
    n_ok_claims = sum(1 for e in entries if "claim" in e and e.get("proved") and e.get("kind") != "deduction")
    n_ok_scripts = sum(1 for e in entries if "script" in e and e.get("passed"))
    elapsed = time.perf_counter() - start
    print(f"{n_ok_claims}/{n_claims} claims + {n_ok_scripts}/{len(script_names)} scripts passed "
          f"in {elapsed:.2f}s (method {args.method})")
    summary = {"method": args.method, "passed": not failures, "failures": failures,
               "seconds": round(elapsed, 3), "results": entries}
    if args.summary:
        _write(json.dumps(summary, indent=1) + "\n", args.summary)
    else:
        print(json.dumps(summary))
    if failures:
        print(f"first failure: {failures[0]}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --- oracle --------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    rep = run_oracle(args.samples, args.seed)
    print(json.dumps({
        "samples": rep.samples,
        "seed": rep.seed,
        "trace_deviation": rep.trace_deviation,
        "tance_deviation": rep.tance_deviation,
        "ok": rep.ok,
    }))
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- parser --------------------------------------------------------------

def _add_triple(p):
    p.add_argument("n", nargs=3, metavar="N", help="angle indices n1 n2 n3 (integers >= 3 or 'inf')")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chtriangles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="type A / type B verdict for one triple")
    _add_triple(p)
    p.add_argument("--grid", type=int, default=typeclass.DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=typeclass.DEFAULT_TOL)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="classify every sorted triple up to --n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--include-infinity", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--grid", type=int, default=typeclass.DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=typeclass.DEFAULT_TOL)
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default: ${typeclass.THREADS_ENV} or the CPU count)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("path", help="trace of W_B sampled along the path")
    _add_triple(p)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--out")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("figure", help="SVG of the deltoid, circle F and marked points")
    _add_triple(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="certify the registered inequalities and run the two scripts")
    p.add_argument("--claims", default="all", help="'all' or a comma-separated list of claim/script names")
    p.add_argument("--method", choices=METHODS, default="both")
    p.add_argument("--max-depth", type=int, default=40)
    p.add_argument("--emit-cert", metavar="DIR", help="write DIR/<claim>.json certificates")
    p.add_argument("--threshold", action="append", metavar="NAME=VALUE",
                   help="replace a claim threshold (negative controls); repeatable")
    p.add_argument("--summary", metavar="FILE", help="write the JSON summary to FILE instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="closed forms against matrix products on random parameters")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownClaim, DomainError) as exc:
        msg = f"unknown claim: {exc.args[0]}" if isinstance(exc, UnknownClaim) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ChTriangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
