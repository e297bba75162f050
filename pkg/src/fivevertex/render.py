"""
Deterministic SVG rendering of lattice states, in the usual figure style:
a rectangular grid with vertex dots, a circle on every edge midpoint
(stroked in the edge's color), '+' marks on uncolored boundary edges,
thick colored polylines along each path, and row/column labels.

Identical states render to byte-identical SVG.
"""

import colorsys

from . import lattice

__all__ = ["color_hex", "render_svg"]

_UNIT = 40  # half the grid pitch, in pixels

_BASE_COLORS = ("#cc2222", "#2244cc", "#22aa33", "#ee8800")


def color_hex(m: int) -> str:
    """Palette: red, blue, green, orange, then golden-angle hues."""
    if m <= len(_BASE_COLORS):
        return _BASE_COLORS[m - 1]
    hue = ((m - len(_BASE_COLORS) - 1) * 137.508 + 60.0) % 360.0
    rgb = colorsys.hls_to_rgb(hue / 360.0, 0.45, 0.85)
    return "#" + "".join(f"{round(c * 255):02x}" for c in rgb)


def _vertex_xy(spec, i, j):
    # columns run right to left: column N-1 is leftmost
    x = 2 * _UNIT * (spec.n - j)
    y = 2 * _UNIT * i
    return x, y


def _edge_xy(spec, edge):
    kind, a, b = edge
    if kind == "h":
        # slot b: midpoint between vertices (a, b) and (a, b-1)
        x = 2 * _UNIT * (spec.n - b) + _UNIT
        y = 2 * _UNIT * a
    else:
        x = 2 * _UNIT * (spec.n - b)
        y = 2 * _UNIT * a + _UNIT
    return x, y


def _all_edges(spec):
    for i in range(1, spec.r + 1):
        for slot in range(spec.n + 1):
            yield ("h", i, slot)
    for k in range(spec.r + 1):
        for j in range(spec.n):
            yield ("v", k, j)


def _edge_spin(state, edge):
    kind, a, b = edge
    if kind == "h":
        return state.horizontal[a - 1][b]
    return state.vertical[a][b]


def _is_boundary(spec, edge):
    kind, a, b = edge
    if kind == "h":
        return b == 0 or b == spec.n
    return a == 0 or a == spec.r


def render_svg(state: lattice.LatticeState) -> str:
    spec = state.spec
    width = _UNIT * 2 * (spec.n + 1)
    height = _UNIT * 2 * (spec.r + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    # grid lines
    for i in range(1, spec.r + 1):
        _, y = _vertex_xy(spec, i, 0)
        parts.append(f'<line x1="{_UNIT}" y1="{y}" x2="{width - _UNIT}" '
                     f'y2="{y}" stroke="black" stroke-width="2"/>')
    for j in range(spec.n - 1, -1, -1):
        x, _ = _vertex_xy(spec, 1, j)
        parts.append(f'<line x1="{x}" y1="{_UNIT}" x2="{x}" '
                     f'y2="{height - _UNIT}" stroke="black" stroke-width="2"/>')
    # colored paths under the circles: edge midpoints joined through the
    # vertex each edge flows into, giving right-angle corners at turns
    for m in range(1, spec.r + 1):
        points = []
        for edge in lattice.color_path(state, m):
            kind, a, b = edge
            points.append(_edge_xy(spec, edge))
            if kind == "v" and a < spec.r:
                points.append(_vertex_xy(spec, a + 1, b))
            elif kind == "h" and b > 0:
                points.append(_vertex_xy(spec, a, b - 1))
        text = " ".join(f"{x},{y}" for x, y in points)
        parts.append(f'<polyline points="{text}" fill="none" '
                     f'stroke="{color_hex(m)}" stroke-width="5"/>')
    # vertex dots
    for i, j in state.vertices():
        x, y = _vertex_xy(spec, i, j)
        parts.append(f'<circle cx="{x}" cy="{y}" r="5" fill="black"/>')
    # edge midpoints: circles, colored stroke when colored, '+' when an
    # uncolored boundary edge
    for edge in _all_edges(spec):
        x, y = _edge_xy(spec, edge)
        spin = _edge_spin(state, edge)
        if spin:
            parts.append(f'<circle cx="{x}" cy="{y}" r="10" fill="white" '
                         f'stroke="{color_hex(spin)}" stroke-width="4"/>')
        elif _is_boundary(spec, edge):
            parts.append(f'<text x="{x}" y="{y + 6}" font-size="18" '
                         f'text-anchor="middle" font-family="monospace">+</text>')
        else:
            parts.append(f'<circle cx="{x}" cy="{y}" r="10" fill="white" '
                         f'stroke="black" stroke-width="2"/>')
    # labels: columns above, rows on the left
    for j in range(spec.n - 1, -1, -1):
        x, _ = _vertex_xy(spec, 1, j)
        parts.append(f'<text x="{x}" y="{_UNIT - 22}" font-size="16" '
                     f'text-anchor="middle" font-family="monospace">{j}</text>')
    for i in range(1, spec.r + 1):
        _, y = _vertex_xy(spec, i, 0)
        parts.append(f'<text x="{_UNIT - 24}" y="{y + 6}" font-size="16" '
                     f'text-anchor="middle" font-family="monospace">{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
