"""Deterministic SVG and ASCII rendering for figures.

Plats render as grids of labeled twist boxes with the top/bottom matching
arcs drawn explicitly; PD diagrams render at crossing level with the under
strand broken at each crossing.  Output bytes depend only on the input
object, so renders are reproducible artifacts.
"""

from __future__ import annotations

import networkx as nx

from .pd import DiagramError, OrientedPDDiagram
from .plat import PlatDiagram

_STRAND_GAP = 60.0
_ROW_H = 50.0
_MARGIN = 40.0
_CAP_H = 30.0


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _svg_doc(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    style = (
        "<style>line,path{stroke:#222;stroke-width:2;fill:none}"
        "rect{stroke:#222;stroke-width:1.5;fill:#fff}"
        "text{font:12px monospace;fill:#222;text-anchor:middle;"
        "dominant-baseline:middle}</style>"
    )
    return "\n".join([head, style, *body, "</svg>"]) + "\n"


def render_plat_svg(P: PlatDiagram) -> str:
    """Grid rendering: strand verticals, one box per nonzero coefficient."""
    width = 2 * _MARGIN + (2 * P.m - 1) * _STRAND_GAP
    height = 2 * (_MARGIN + _CAP_H) + P.n * _ROW_H

    def sx(s: int) -> float:  # strand s is 1-based
        return _MARGIN + (s - 1) * _STRAND_GAP

    def ry(i: int) -> float:  # y of the bottom of row i (SVG y grows down)
        return height - _MARGIN - _CAP_H - i * _ROW_H

    body = []
    y_bot = height - _MARGIN - _CAP_H
    y_top = _MARGIN + _CAP_H
    for s in range(1, 2 * P.m + 1):
        body.append(
            f'<line x1="{_fmt(sx(s))}" y1="{_fmt(y_top)}" '
            f'x2="{_fmt(sx(s))}" y2="{_fmt(y_bot)}"/>'
        )
    for a, b in P.bottom_matching():
        xa, xb = sx(a), sx(b)
        r = (xb - xa) / 2
        body.append(
            f'<path d="M {_fmt(xa)} {_fmt(y_bot)} '
            f'A {_fmt(r)} {_fmt(_CAP_H)} 0 0 0 {_fmt(xb)} {_fmt(y_bot)}"/>'
        )
    for a, b in P.top_matching():
        xa, xb = sx(a), sx(b)
        r = (xb - xa) / 2
        body.append(
            f'<path d="M {_fmt(xa)} {_fmt(y_top)} '
            f'A {_fmt(r)} {_fmt(_CAP_H)} 0 0 1 {_fmt(xb)} {_fmt(y_top)}"/>'
        )
    for i, row in enumerate(P.rows, start=1):
        for (p, q), a in zip(P.row_pairs(i), row):
            if a == 0:
                continue
            x0 = sx(p) - 18
            x1 = sx(q) + 18
            y1 = ry(i)
            y0 = y1 - _ROW_H + 10
            body.append(
                f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" '
                f'width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}"/>'
            )
            cx = (x0 + x1) / 2
            cy = (y0 + y1) / 2
            body.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy)}">{a:+d}</text>')
    return _svg_doc(width, height, body)


def render_plat_ascii(P: PlatDiagram) -> str:
    """Fixed-width grid, top row first; blank cells are untwisted regions."""
    cell = 6
    m = P.m
    strand_line = "".join("|".center(cell) for _ in range(2 * m))
    lines = []
    caps_top = " ".join(
        f"({a},{b})" for a, b in P.top_matching()
    )
    lines.append(f"top caps: {caps_top}")
    for i in range(P.n, 0, -1):
        row = P.rows[i - 1]
        cells = [" " * cell] * (2 * m)
        for (p, q), a in zip(P.row_pairs(i), row):
            if a == 0:
                continue
            label = f"[{a:+d}]".center(2 * cell)
            cells[p - 1] = label[:cell]
            cells[q - 1] = label[cell:]
        lines.append(strand_line)
        lines.append("".join(cells) + f"  row {i}")
    lines.append(strand_line)
    caps_bot = " ".join(f"({a},{b})" for a, b in P.bottom_matching())
    lines.append(f"bottom caps: {caps_bot}")
    return "\n".join(lines) + "\n"


def _pd_positions(K: OrientedPDDiagram) -> dict[int, tuple[float, float]]:
    g = nx.Graph()
    g.add_nodes_from(range(K.crossing_count()))
    for c, quad in enumerate(K.crossings):
        for e in quad:
            a, b = K.edge_ends[e]
            if a[0] != b[0]:
                g.add_edge(a[0], b[0])
    is_planar, emb = nx.check_planarity(g)
    if is_planar and g.number_of_nodes() > 2:
        pos = nx.planar_layout(emb)
    else:
        pos = nx.circular_layout(g, scale=1.0)
    return {c: (float(x), float(y)) for c, (x, y) in sorted(pos.items())}


def render_pd_svg(K: OrientedPDDiagram) -> str:
    """Crossing-level rendering: under strands break at each crossing."""
    size = 420.0
    if K.unknotted or K.crossing_count() == 0:
        body = [
            f'<circle cx="{_fmt(size / 2)}" cy="{_fmt(size / 2)}" r="120" '
            'stroke="#222" stroke-width="2" fill="none"/>'
        ]
        return _svg_doc(size, size, body)
    raw = _pd_positions(K)
    xs = [p[0] for p in raw.values()]
    ys = [p[1] for p in raw.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = (size - 2 * _MARGIN) / span

    def at(c):
        x, y = raw[c]
        return (
            _MARGIN + (x - min(xs)) * scale,
            _MARGIN + (y - min(ys)) * scale,
        )

    body = []
    loops_seen: dict[int, int] = {}
    for e in sorted(K.edge_ends):
        (c1, _s1), (c2, _s2) = K.edge_ends[e]
        x1, y1 = at(c1)
        x2, y2 = at(c2)
        if c1 == c2:
            # self loop: bulge out with a cubic, staggered per repeat
            k = loops_seen.get(c1, 0)
            loops_seen[c1] = k + 1
            off = 60 + 30 * k
            body.append(
                f'<path d="M {_fmt(x1)} {_fmt(y1)} '
                f"C {_fmt(x1 - off)} {_fmt(y1 - off)} "
                f'{_fmt(x1 + off)} {_fmt(y1 - off)} {_fmt(x2)} {_fmt(y2)}"/>'
            )
        else:
            body.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
            )
    # paint a gap over each crossing, then restore the over strand
    for c, quad in enumerate(K.crossings):
        x, y = at(c)
        body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" '
            'fill="#fff" stroke="none"/>'
        )
        oin = K.over_in[c]
        for slot in (oin, (oin + 2) % 4):
            e = quad[slot]
            (c1, s1), (c2, s2) = K.edge_ends[e]
            other = c2 if (c1, s1) == (c, slot) else c1
            if other == c:
                continue
            ox, oy = at(other)
            dx, dy = ox - x, oy - y
            norm = max((dx * dx + dy * dy) ** 0.5, 1e-9)
            body.append(
                f'<line x1="{_fmt(x)}" y1="{_fmt(y)}" '
                f'x2="{_fmt(x + 11 * dx / norm)}" y2="{_fmt(y + 11 * dy / norm)}"/>'
            )
    return _svg_doc(size, size, body)


def render_object(obj, fmt: str) -> str:
    """Dispatch used by the command line front end."""
    if fmt == "svg":
        if isinstance(obj, PlatDiagram):
            return render_plat_svg(obj)
        if isinstance(obj, OrientedPDDiagram):
            return render_pd_svg(obj)
    elif fmt == "ascii":
        if isinstance(obj, PlatDiagram):
            return render_plat_ascii(obj)
        if isinstance(obj, OrientedPDDiagram):
            raise DiagramError("ascii rendering is only available for plats")
    else:
        raise DiagramError(f"unknown render format {fmt!r}")
    raise DiagramError("unrenderable object")
