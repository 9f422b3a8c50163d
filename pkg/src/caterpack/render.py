"""SVG pictures of packing layouts on the unit circle.

Position ``i`` sits at angle ``90 - 360 i / n`` degrees, so labels run
clockwise from the top. Inner edges are straight chords; outer edges are
cubic curves bulging away from the circle along the shorter arc.
"""
from __future__ import annotations

import math

from .errors import ParameterError
from .layout import OUTER

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)

SCALE = 200.0
MARGIN = 120.0


def _xy(p: int, n: int, r: float = 1.0) -> tuple[float, float]:
    t = math.pi / 2 - 2 * math.pi * p / n
    return MARGIN + SCALE * (1 + r * math.cos(t)), MARGIN + SCALE * (1 - r * math.sin(t))


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _outer_path(a: int, b: int, n: int) -> str:
    # walk the shorter way round; bulge grows with arc length
    steps = (b - a) % n
    if steps > n - steps:
        a, b = b, a
        steps = n - steps
    bulge = 1.0 + 0.15 + 0.9 * steps / n
    mid = a + steps / 2
    ax, ay = _xy(a, n)
    bx, by = _xy(b, n)
    c1 = _xy(a + steps / 4, n, bulge)
    c2 = _xy(mid + steps / 4, n, bulge)
    return (
        f"M {_fmt(ax)} {_fmt(ay)} C {_fmt(c1[0])} {_fmt(c1[1])} "
        f"{_fmt(c2[0])} {_fmt(c2[1])} {_fmt(bx)} {_fmt(by)}"
    )


def layout_svg(layout) -> str:
    """SVG text for a layout; identical input gives identical bytes."""
    drawings = list(layout.drawings)
    if not drawings:
        raise ParameterError("layout has no drawings")
    n = layout.n
    size = 2 * (MARGIN + SCALE)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(size)}" height="{_fmt(size)}" '
        f'viewBox="0 0 {_fmt(size)} {_fmt(size)}">',
        f'<circle cx="{_fmt(MARGIN + SCALE)}" cy="{_fmt(MARGIN + SCALE)}" r="{_fmt(SCALE)}" '
        'fill="none" stroke="#cccccc" stroke-dasharray="4 4"/>',
    ]
    for i, d in enumerate(drawings):
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<g class="drawing" id="drawing-{i}" stroke="{color}" fill="none" stroke-width="1.5">')
        for (a, b), side in zip(d.edges, d.sides):
            if side == OUTER:
                out.append(f'<path d="{_outer_path(a, b, n)}"/>')
            else:
                (x1, y1), (x2, y2) = _xy(a, n), _xy(b, n)
                out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
        out.append("</g>")
    for p in range(n):
        x, y = _xy(p, n)
        lx, ly = _xy(p, n, 1.09)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#000000"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" text-anchor="middle" '
            f'dominant-baseline="middle">v{p + 1}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
