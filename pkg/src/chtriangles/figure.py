"""SVG picture of the trace plane: deltoid, circle F and the marked points.

Coordinates are trace coordinates; the drawing group flips the y axis so
the upper half plane is drawn on top.  Output is a pure function of the
triple, so repeated runs are byte-identical.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .isometry import circle_of, deltoid_boundary, trace_WB
from .triangle import TriangleAngles, thresholds

DELTOID_SAMPLES = 720
SQRT3 = math.sqrt(3.0)
LINE_SLOPE = -3 * SQRT3 / 5  # the line y = (3 sqrt 3 / 5)(1 - x)


def _num(v: float) -> str:
    v = 0.0 if abs(v) < 5e-13 else v
    return f"{v:.6f}".rstrip("0").rstrip(".")


def marked_points(angles: TriangleAngles) -> dict[str, complex]:
    """Named points of the picture that exist for this triple."""
    r1, r2, r3 = angles.radii()
    th = thresholds(r1, r2, r3)
    if th.t_max <= -1 + 1e-12:
        raise DomainError(f"{angles} is rigid: the path is a single point")
    s = r1 * r1 + r2 * r2 + r3 * r3
    a = 4 * s - 3
    p = r1 * r2 * r3
    pts = {"start": trace_WB(r1, r2, r3, -1.0)}
    if -1 <= th.t_WA <= th.t_max:
        pts["t_WA"] = trace_WB(r1, r2, r3, th.t_WA)
    # x0: the circle meets the ray y = -sqrt(3) x
    d1 = 4 * (-3 * a * a + 256 * p * p)
    if d1 >= 0:
        x0 = (-2 * a + math.sqrt(d1)) / 8
        if x0 < 0:
            pts["x0"] = complex(x0, -SQRT3 * x0)
    if angles.n1 == 9:
        x1 = (79 - 50 * math.sqrt(10)) / 169
        pts["x1"] = complex(x1, LINE_SLOPE * (x1 - 1))
        d2 = 100 * (-27 * a * a - 54 * a + 3328 * p * p - 27)
        if d2 >= 0:
            x2 = (-2 * (25 * a - 27) - math.sqrt(d2)) / 104
            pts["x2"] = complex(x2, LINE_SLOPE * (x2 - 1))
    return pts


def render_svg(angles: TriangleAngles, samples: int = DELTOID_SAMPLES) -> str:
    if samples < DELTOID_SAMPLES:
        raise ValueError(f"the deltoid needs at least {DELTOID_SAMPLES} samples")
    pts = marked_points(angles)
    circle = circle_of(*angles.radii())
    deltoid = deltoid_boundary(samples)
    d = "M " + " L ".join(f"{_num(z.real)},{_num(z.imag)}" for z in deltoid) + " Z"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="600" viewBox="-4 -4 8 8">',
        f"  <title>trace plane for {angles}</title>",
        '  <g transform="scale(1,-1)" fill="none" stroke-width="0.02">',
        '    <line x1="-4" y1="0" x2="4" y2="0" stroke="#bbbbbb"/>',
        '    <line x1="0" y1="-4" x2="0" y2="4" stroke="#bbbbbb"/>',
        f'    <path id="deltoid" d="{d}" stroke="#000000"/>',
        f'    <circle id="circle-F" cx="{_num(circle.center_x)}" cy="0" r="{_num(circle.radius)}" stroke="#1f5fbf"/>',
    ]
    if angles.n1 == 9:
        # long enough to cross the whole view box
        xa, xb = -6.0, 6.0
        out.append(f'    <line id="line-l" x1="{_num(xa)}" y1="{_num(LINE_SLOPE * (xa - 1))}" '
                   f'x2="{_num(xb)}" y2="{_num(LINE_SLOPE * (xb - 1))}" stroke="#bf1f1f"/>')
    for name, z in pts.items():
        out.append(f'    <circle id="mark-{name}" class="marker" cx="{_num(z.real)}" cy="{_num(z.imag)}" '
                   f'r="0.06" fill="#bf7f00" stroke="none"/>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
