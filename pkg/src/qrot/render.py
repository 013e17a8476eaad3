"""SVG drawings of fans and annuli.

Oriented edges get red arrowheads.  With ``highlight`` set, the triangles
counted by that path's (or loop's) coarea are shaded gray.  Annuli are drawn
by bending the periodic strip around two concentric circles: ``x`` becomes
the angle and ``y`` the radius.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .annulus import AnnulusTriangulation, enumerate_loops
from .polygon import FanTriangulation, enumerate_paths

_MARKER = (
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
    'markerWidth="7" markerHeight="7" orient="auto-start-reverse">'
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="red"/></marker></defs>'
)


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    return "\n".join([head, _MARKER, *body, "</svg>"]) + "\n"


def _fmt(points) -> str:
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in points)


def render_fan(T: FanTriangulation, highlight: int | None = None) -> str:
    """The strip drawing; ``highlight`` indexes the paths from k+1 to 1."""
    width = T.positions[T.k + 1][0] or 1
    sx = 560 / width
    sy = 70
    margin = 40

    def at(v: int) -> tuple[float, float]:
        x, y = T.positions[v]
        return margin + x * sx, margin + (3 - y) * sy

    body: list[str] = []
    shaded: frozenset[int] = frozenset()
    if highlight is not None:
        paths = enumerate_paths(T, T.k + 1, 1)
        if not 0 <= highlight < len(paths):
            raise ValueError(f"highlight index {highlight} out of range 0..{len(paths) - 1}")
        shaded = paths[highlight].coarea_triangles
    for i, t in enumerate(T.triangles):
        fill = "#c8c8c8" if i in shaded else "none"
        body.append(f'<polygon points="{_fmt(at(v) for v in t.vertices)}" fill="{fill}" stroke="none"/>')
    ux, uy = at(0)
    vx, vy = at(1)
    body.append(f'<line x1="{ux:.2f}" y1="{uy:.2f}" x2="{vx:.2f}" y2="{vy:.2f}" stroke="black"/>')
    for tail, head in sorted(T.oriented_edges):
        (x1, y1), (x2, y2) = at(tail), at(head)
        body.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="black" marker-end="url(#arrow)"/>'
        )
        d = T.weight_exponent[(min(tail, head), max(tail, head))]
        if d:
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            label = "q" if d == 1 else f"q^{d}"
            body.append(f'<text x="{mx + 4:.2f}" y="{my - 4:.2f}" font-size="11" fill="blue">{escape(label)}</text>')
    for v in T.vertices:
        x, y = at(v)
        dy = -8 if T.positions[v][1] else 18
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        body.append(f'<text x="{x - 4:.2f}" y="{y + dy:.2f}" font-size="13">{v}</text>')
    return _svg(2 * margin + 560, 2 * margin + 3 * sy, body)


def render_annulus(A: AnnulusTriangulation, highlight: int | None = None) -> str:
    """Concentric drawing; ``highlight`` indexes :func:`enumerate_loops`."""
    cx = cy = 260.0
    r_in, r_out = 80.0, 220.0
    P = A.period

    def polar(x: float, y: float) -> tuple[float, float]:
        theta = 2 * math.pi * x / P
        r = r_out + (r_in - r_out) * y / 3
        return cx + r * math.cos(theta), cy - r * math.sin(theta)

    def segment(p, q, steps: int = 24):
        return [polar(p[0] + (q[0] - p[0]) * s / steps, p[1] + (q[1] - p[1]) * s / steps) for s in range(steps + 1)]

    body: list[str] = []
    mask = 0
    if highlight is not None:
        loops = enumerate_loops(A)
        if not 0 <= highlight < len(loops):
            raise ValueError(f"highlight index {highlight} out of range 0..{len(loops) - 1}")
        mask = loops[highlight].coarea_mask
    spos = A.strip_positions
    for i, t in enumerate(A.strip_triangles):
        if mask >> i & 1:
            a, b, c = (spos[v] for v in t)
            outline = segment(a, b)[:-1] + segment(b, c)[:-1] + segment(c, a)[:-1]
            body.append(f'<polygon points="{_fmt(outline)}" fill="#c8c8c8" stroke="none"/>')
    body.append(f'<circle cx="{cx}" cy="{cy}" r="{r_in}" fill="none" stroke="#999" stroke-dasharray="3,3"/>')
    body.append(f'<circle cx="{cx}" cy="{cy}" r="{r_out}" fill="none" stroke="#999" stroke-dasharray="3,3"/>')
    for arc in A.arcs:
        p, q = A.arc_points(arc)
        body.append(
            f'<polyline points="{_fmt(segment(p, q))}" fill="none" stroke="black" marker-end="url(#arrow)"/>'
        )
    for v, (x, y) in sorted(A.positions.items()):
        px, py = polar(x, y)
        body.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3" fill="black"/>')
        body.append(f'<text x="{px + 5:.2f}" y="{py - 5:.2f}" font-size="13">{v}</text>')
    return _svg(2 * cx, 2 * cy, body)
