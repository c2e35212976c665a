"""SVG 1.1 rendering. Floats appear only here and never flow back into predicates."""
from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .geometry import SeparatingLine, find_separating_line
from .model import MwgInstance, induce_mwg

COLORS = ("#c0392b", "#2c6fbb")
SIZE = 640
MARGIN = 40


def render(inst: MwgInstance, disks: bool = False, title: str | None = None) -> str:
    graphs = induce_mwg(inst)
    sides = (inst.gamma0, inst.gamma1)
    pts = [(float(p.x), float(p.y)) for d in sides for p in d.positions]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (SIZE - 2 * MARGIN) / span

    def X(x: float) -> float:
        return MARGIN + (x - x0) * scale

    def Y(y: float) -> float:
        return SIZE - MARGIN - (y - y0) * scale  # screen y grows downwards

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title or 'MWG drawing')}</title>",
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    line = inst.separator
    if line is None:
        line = find_separating_line(inst.gamma0.positions, inst.gamma1.positions)
    if line is not None:
        lo, hi = -MARGIN / scale, (SIZE - MARGIN) / scale  # canvas edges in data units
        out.append(_separator(line, x0 + lo, x0 + hi, y0 + lo, y0 + hi, X, Y))
    else:
        out.append('<!-- the drawings are not linearly separable -->')
    if disks:
        out.append('<g fill="none" stroke-dasharray="4 3" opacity="0.3">')
        for s, (d, g) in enumerate(zip(sides, graphs)):
            pos = dict(d.vertices)
            for a, b in g.non_edges():
                (ax, ay), (bx, by) = (float(pos[a].x), float(pos[a].y)), (float(pos[b].x), float(pos[b].y))
                r = ((ax - bx) ** 2 + (ay - by) ** 2) ** 0.5 / 2 * scale
                out.append(f'<circle cx="{X((ax + bx) / 2):.3f}" cy="{Y((ay + by) / 2):.3f}" '
                           f'r="{r:.3f}" stroke="{COLORS[s]}"/>')
        out.append("</g>")
    for s, (d, g) in enumerate(zip(sides, graphs)):
        pos = dict(d.vertices)
        out.append(f'<g stroke="{COLORS[s]}" stroke-width="2">')
        for a, b in g.edge_list():
            out.append(f'<line x1="{X(float(pos[a].x)):.3f}" y1="{Y(float(pos[a].y)):.3f}" '
                       f'x2="{X(float(pos[b].x)):.3f}" y2="{Y(float(pos[b].y)):.3f}"/>')
        out.append("</g>")
    for s, d in enumerate(sides):
        out.append(f'<g fill="{COLORS[s]}" font-family="sans-serif" font-size="11">')
        for lbl, p in d.vertices:
            cx, cy = X(float(p.x)), Y(float(p.y))
            out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="4"/>')
            out.append(f'<text x="{cx + 6:.3f}" y="{cy - 6:.3f}">{escape(lbl)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _separator(line: SeparatingLine, xa, xb, ya, yb, X, Y) -> str:
    a, b, c = float(line.a), float(line.b), float(line.c)
    if abs(b) >= abs(a):
        p, q = (xa, (c - a * xa) / b), (xb, (c - a * xb) / b)
    else:
        p, q = ((c - b * ya) / a, ya), ((c - b * yb) / a, yb)
    return (f'<line x1="{X(p[0]):.3f}" y1="{Y(p[1]):.3f}" x2="{X(q[0]):.3f}" y2="{Y(q[1]):.3f}" '
            f'stroke="#555" stroke-width="1" stroke-dasharray="8 4" class={quoteattr("separator")}/>')
