"""Deterministic SVG scatter plots of polynomial roots in the complex plane.

Written by hand rather than through a plotting library so that the same roots
always yield byte-identical files.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

PANEL = 420
MARGIN = 50
REAL_TOL = 1e-6


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _bounds(points, include_origin):
    xs = [z.real for z in points]
    ys = [z.imag for z in points]
    if include_origin:
        xs.append(0.0)
        ys.append(0.0)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.08 * span
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 + pad
    return cx - half, cx + half, cy - half, cy + half


def _panel(points, highlight, bounds, offset_x, title):
    x0, x1, y0, y1 = bounds
    inner = PANEL - 2 * MARGIN

    def sx(x):
        return offset_x + MARGIN + (x - x0) / (x1 - x0) * inner

    def sy(y):
        return MARGIN + (y1 - y) / (y1 - y0) * inner

    out = [f'<g class="panel">',
           f'<rect x="{offset_x + MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}" '
           f'fill="none" stroke="#444"/>',
           f'<text x="{offset_x + PANEL / 2:.2f}" y="{MARGIN - 12}" text-anchor="middle" '
           f'font-size="13">{escape(title)}</text>']
    if y0 <= 0 <= y1:
        out.append(f'<line class="real-axis" x1="{sx(x0):.2f}" y1="{sy(0):.2f}" '
                   f'x2="{sx(x1):.2f}" y2="{sy(0):.2f}" stroke="#888"/>')
    if x0 <= 0 <= x1:
        out.append(f'<line class="imag-axis" x1="{sx(0):.2f}" y1="{sy(y0):.2f}" '
                   f'x2="{sx(0):.2f}" y2="{sy(y1):.2f}" stroke="#bbb" stroke-dasharray="4 3"/>')
    base = MARGIN + inner
    out.append(f'<text x="{offset_x + MARGIN}" y="{base + 16}" font-size="10">{_fmt(x0)}</text>')
    out.append(f'<text x="{offset_x + MARGIN + inner}" y="{base + 16}" font-size="10" '
               f'text-anchor="end">{_fmt(x1)}</text>')
    out.append(f'<text x="{offset_x + MARGIN - 4}" y="{base}" font-size="10" '
               f'text-anchor="end">{_fmt(y0)}</text>')
    out.append(f'<text x="{offset_x + MARGIN - 4}" y="{MARGIN + 10}" font-size="10" '
               f'text-anchor="end">{_fmt(y1)}</text>')
    out.append(f'<text x="{offset_x + PANEL / 2:.2f}" y="{base + 32}" text-anchor="middle" '
               f'font-size="11">Re(z)</text>')
    for z in points:
        if not (x0 <= z.real <= x1 and y0 <= z.imag <= y1):
            continue
        colour = "#c0392b" if highlight(z) else "#1f4e9c"
        out.append(f'<circle cx="{sx(z.real):.2f}" cy="{sy(z.imag):.2f}" r="3" fill="{colour}" '
                   f'data-re="{z.real:.17g}" data-im="{z.imag:.17g}"/>')
    out.append("</g>")
    return out


def roots_svg(roots, n: int, k: int, version: str = "") -> str:
    """Global view of all roots, plus a zoom on the non-real ones if any exist."""
    roots = list(roots)
    nonreal = [z for z in roots if abs(z.imag) >= REAL_TOL]
    panels = 2 if nonreal else 1
    width = PANEL * panels
    height = PANEL + 30
    is_nonreal = lambda z: abs(z.imag) >= REAL_TOL
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    if version:
        lines.append(f"<!-- ipgp {escape(version)} -->")
    lines.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    lines += _panel(roots, is_nonreal, _bounds(roots, True), 0, "all roots")
    if nonreal:
        lines += _panel(roots, is_nonreal, _bounds(nonreal, False), PANEL, "zoom: non-real roots")
    lines.append(f'<text class="caption" x="{width / 2:.2f}" y="{height - 8}" '
                 f'text-anchor="middle" font-size="14">GP({n},{k})</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
