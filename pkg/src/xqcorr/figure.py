"""Static SVG rendering of a decoherence sweep.

One self-contained figure: deficit as a solid line, concurrence dashed,
optional oracle-deficit overlay, and a vertical marker where the
entanglement dies.  No plotting dependency; the SVG is assembled as text
so output is byte-stable.
"""
from __future__ import annotations

from typing import Sequence

from .dynamics import SweepRecord

WIDTH = 640
HEIGHT = 440
MARGIN_LEFT = 70
MARGIN_RIGHT = 30
MARGIN_TOP = 40
MARGIN_BOTTOM = 55

DEFICIT_STYLE = 'fill="none" stroke="#c0392b" stroke-width="2"'
CONCURRENCE_STYLE = 'fill="none" stroke="#2980b9" stroke-width="2" stroke-dasharray="7 5"'
ORACLE_STYLE = 'fill="none" stroke="#e67e22" stroke-width="1.2"'
MARKER_STYLE = 'stroke="#7f8c8d" stroke-width="1" stroke-dasharray="2 3"'
TEXT_STYLE = 'font-family="sans-serif" font-size="13" fill="#2c3e50"'


def _nice_ceiling(y: float) -> float:
    if y <= 0.0:
        return 1.0
    step = 0.1
    k = int(y / step) + 1
    return k * step


def _px(p: float, x_span: float) -> float:
    return MARGIN_LEFT + p * x_span


def _py(v: float, y_max: float, y_span: float) -> float:
    return MARGIN_TOP + (1.0 - v / y_max) * y_span


def _polyline(points: list[tuple[float, float]], style: str) -> str:
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    return f'<polyline {style} points="{coords}"/>'


def sweep_svg(records: Sequence[SweepRecord], p_star: float | None = None) -> str:
    """Figure for a sweep: value curves over channel strength p in [0, 1]."""
    if len(records) < 2:
        raise ValueError(f"need at least 2 records to draw a sweep, got {len(records)}")
    x_span = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    y_span = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    values = [r.deficit for r in records] + [r.concurrence for r in records]
    values += [r.oracle_deficit for r in records if r.oracle_deficit is not None]
    y_max = _nice_ceiling(max(values))
    has_oracle = any(r.oracle_deficit is not None for r in records)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]

    # axes
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + y_span
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x0 + x_span}" y2="{y0}" stroke="black"/>')
    parts.append(f'<line x1="{x0}" y1="{MARGIN_TOP}" x2="{x0}" y2="{y0}" stroke="black"/>')
    for i in range(5):
        p = i / 4.0
        x = _px(p, x_span)
        parts.append(f'<line x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + 5}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{y0 + 20}" text-anchor="middle" {TEXT_STYLE}>{p:g}</text>')
        v = y_max * i / 4.0
        y = _py(v, y_max, y_span)
        parts.append(f'<line x1="{x0 - 5}" y1="{y:.2f}" x2="{x0}" y2="{y:.2f}" stroke="black"/>')
        parts.append(f'<text x="{x0 - 9}" y="{y + 4:.2f}" text-anchor="end" {TEXT_STYLE}>{v:g}</text>')
    parts.append(f'<text x="{x0 + x_span / 2:.2f}" y="{HEIGHT - 12}" text-anchor="middle" '
                 f'{TEXT_STYLE}>channel strength p</text>')
    parts.append(f'<text x="18" y="{MARGIN_TOP + y_span / 2:.2f}" text-anchor="middle" {TEXT_STYLE} '
                 f'transform="rotate(-90 18 {MARGIN_TOP + y_span / 2:.2f})">correlation value</text>')

    # sudden-death marker behind the curves
    if p_star is not None:
        x = _px(p_star, x_span)
        parts.append(f'<line x1="{x:.2f}" y1="{MARGIN_TOP}" x2="{x:.2f}" y2="{y0}" {MARKER_STYLE}/>')
        parts.append(f'<text x="{x + 4:.2f}" y="{MARGIN_TOP + 14}" {TEXT_STYLE}>p* = {p_star:.6g}</text>')

    deficit_pts = [(_px(r.p, x_span), _py(r.deficit, y_max, y_span)) for r in records]
    conc_pts = [(_px(r.p, x_span), _py(r.concurrence, y_max, y_span)) for r in records]
    parts.append(_polyline(deficit_pts, DEFICIT_STYLE))
    parts.append(_polyline(conc_pts, CONCURRENCE_STYLE))
    if has_oracle:
        oracle_pts = [(_px(r.p, x_span), _py(r.oracle_deficit, y_max, y_span))
                      for r in records if r.oracle_deficit is not None]
        parts.append(_polyline(oracle_pts, ORACLE_STYLE))

    # legend
    lx = x0 + x_span - 210
    ly = MARGIN_TOP + 8
    parts.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 34}" y2="{ly}" {DEFICIT_STYLE}/>')
    parts.append(f'<text x="{lx + 40}" y="{ly + 4}" {TEXT_STYLE}>one-way deficit (bits)</text>')
    parts.append(f'<line x1="{lx}" y1="{ly + 20}" x2="{lx + 34}" y2="{ly + 20}" {CONCURRENCE_STYLE}/>')
    parts.append(f'<text x="{lx + 40}" y="{ly + 24}" {TEXT_STYLE}>concurrence</text>')
    if has_oracle:
        parts.append(f'<line x1="{lx}" y1="{ly + 40}" x2="{lx + 34}" y2="{ly + 40}" {ORACLE_STYLE}/>')
        parts.append(f'<text x="{lx + 40}" y="{ly + 44}" {TEXT_STYLE}>deficit, sphere search</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
