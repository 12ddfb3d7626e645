"""Standalone SVG line charts for per-window term series.

Output is plain text built by hand so that identical input always gives
identical bytes (no plotting backend, no timestamps, fixed number format).
"""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

from .errors import ParameterError
from .export import OBSERVED, SeriesTable

WIDTH, HEIGHT = 960, 540
LEFT, RIGHT, TOP, BOTTOM = 70, 210, 40, 100
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
MAX_X_LABELS = 30


def _num(x: float) -> str:
    return f"{x:.2f}"


def _nice_ceiling(x: float) -> float:
    """Smallest 1/2/5 x 10^k that is >= x (1.0 for non-positive input)."""
    if x <= 0:
        return 1.0
    exp = math.floor(math.log10(x))
    for m in (1, 2, 5, 10):
        value = m * 10.0**exp
        if value >= x:
            return value
    return 10.0 ** (exp + 1)


def render_svg(
    table: SeriesTable, metric: str = OBSERVED, title: str | None = None
) -> str:
    """One polyline per term over the window start dates, with a legend."""
    lines = table.values(metric)
    if not lines or not table.window_starts:
        raise ParameterError("cannot plot an empty series")
    return _render(table.window_starts, lines, metric, title)


def _render(
    x_labels: Sequence[str],
    lines: Sequence[tuple[str, Sequence[float]]],
    y_label: str,
    title: str | None,
) -> str:
    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM
    npts = len(x_labels)
    y_max = _nice_ceiling(max((max(v) for _, v in lines), default=0.0))

    def px(i: int) -> float:
        if npts == 1:
            return LEFT + plot_w / 2
        return LEFT + plot_w * i / (npts - 1)

    def py(v: float) -> float:
        return TOP + plot_h * (1 - v / y_max)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    if title:
        out.append(
            f'<text x="{WIDTH // 2}" y="24" text-anchor="middle" font-size="16">'
            f"{escape(title)}</text>"
        )

    # axes
    x0, x1, y0, y1 = LEFT, LEFT + plot_w, TOP + plot_h, TOP
    out.append('<g class="axes" stroke="#000000" stroke-width="1">')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    out.append("</g>")

    # y ticks
    out.append('<g class="y-ticks">')
    for t in range(6):
        v = y_max * t / 5
        y = _num(py(v))
        label = f"{v:g}"
        out.append(
            f'<line x1="{x0 - 4}" y1="{y}" x2="{x0}" y2="{y}" stroke="#000000"/>'
            f'<text x="{x0 - 8}" y="{y}" text-anchor="end" dominant-baseline="middle">'
            f"{label}</text>"
        )
    out.append("</g>")
    out.append(
        f'<text x="16" y="{_num(TOP + plot_h / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 16 {_num(TOP + plot_h / 2)})">{escape(y_label)}</text>'
    )

    # x labels, thinned so they stay legible
    step = max(1, math.ceil(npts / MAX_X_LABELS))
    out.append('<g class="x-ticks">')
    for i in range(0, npts, step):
        x = _num(px(i))
        ly = y0 + 12
        out.append(
            f'<line x1="{x}" y1="{y0}" x2="{x}" y2="{y0 + 4}" stroke="#000000"/>'
            f'<text x="{x}" y="{ly}" text-anchor="end" '
            f'transform="rotate(-45 {x} {ly})">{escape(x_labels[i])}</text>'
        )
    out.append("</g>")

    # series
    for k, (name, values) in enumerate(lines):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{_num(px(i))},{_num(py(v))}" for i, v in enumerate(values))
        out.append(
            f'<polyline class="series" data-term={quoteattr(name)} fill="none" '
            f'stroke="{color}" stroke-width="2" points="{pts}"/>'
        )

    # legend
    out.append('<g class="legend">')
    lx = LEFT + plot_w + 20
    for k, (name, _) in enumerate(lines):
        ly = TOP + 10 + 20 * k
        color = PALETTE[k % len(PALETTE)]
        out.append(
            f'<rect x="{lx}" y="{ly - 6}" width="14" height="4" fill="{color}"/>'
            f'<text x="{lx + 20}" y="{ly}" dominant-baseline="middle">{escape(name)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
