"""Deterministic SVG chart: data as ``+`` markers, the model as a polyline."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .prony import ExponentialModel, evaluate_real
from .series import TimeSeries

WIDTH, HEIGHT = 720, 440
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 20, 30, 50
SAMPLES_PER_UNIT = 10
MARKER_HALF = 4.0


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _label(v: float) -> str:
    return f"{v:.6g}"


def curve_grid(t_min: float, t_max: float) -> np.ndarray:
    if t_max <= t_min:
        return np.array([t_min - 0.5, t_min + 0.5])
    n = int(round((t_max - t_min) * SAMPLES_PER_UNIT)) + 1
    return np.linspace(t_min, t_max, n)


def render_svg(series: TimeSeries, model: ExponentialModel, title: str = "") -> str:
    t, y = series.t, series.y
    grid = curve_grid(float(t.min()), float(t.max()))
    curve = np.asarray(evaluate_real(model, grid), dtype=float)

    x0, x1 = float(grid[0]), float(grid[-1])
    lo = float(min(y.min(), curve.min()))
    hi = float(max(y.max(), curve.max()))
    if hi - lo < 1e-12 * max(1.0, abs(hi)):
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    y0, y1 = lo - pad, hi + pad

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(v):
        return MARGIN_LEFT + (v - x0) / (x1 - x0) * plot_w

    def sy(v):
        return MARGIN_TOP + (y1 - v) / (y1 - y0) * plot_h

    left, right = MARGIN_LEFT, MARGIN_LEFT + plot_w
    top, bottom = MARGIN_TOP, MARGIN_TOP + plot_h
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.1f}" y="18" text-anchor="middle" font-size="14">{escape(title)}</text>')
    out.append(
        f'<g class="axes" stroke="black" stroke-width="1">'
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}"/>'
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}"/></g>'
    )
    t_lo, t_hi = float(t.min()), float(t.max())
    out.append(
        f'<g class="labels" font-size="11" font-family="sans-serif">'
        f'<text x="{_fmt(sx(t_lo))}" y="{bottom + 16}" text-anchor="middle">{_label(t_lo)}</text>'
        f'<text x="{_fmt(sx(t_hi))}" y="{bottom + 16}" text-anchor="middle">{_label(t_hi)}</text>'
        f'<text x="{left - 6}" y="{_fmt(sy(lo))}" text-anchor="end">{_label(lo)}</text>'
        f'<text x="{left - 6}" y="{_fmt(sy(hi))}" text-anchor="end">{_label(hi)}</text>'
        f'<text x="{(left + right) / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle">t</text></g>'
    )
    pts = " ".join(f"{_fmt(sx(a))},{_fmt(sy(b))}" for a, b in zip(grid, curve))
    out.append(f'<polyline class="model" fill="none" stroke="#1f4e9c" stroke-width="1.5" points="{pts}"/>')
    out.append('<g class="data" stroke="#c0392b" stroke-width="1.5">')
    h = MARKER_HALF
    for a, b in zip(t, y):
        cx, cy = sx(a), sy(b)
        out.append(
            f'<path class="marker" d="M{_fmt(cx - h)} {_fmt(cy)}H{_fmt(cx + h)}'
            f'M{_fmt(cx)} {_fmt(cy - h)}V{_fmt(cy + h)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
