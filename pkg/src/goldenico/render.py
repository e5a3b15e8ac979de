"""Deterministic SVG drawing of a musical icosahedron.

The layout is a Schlegel diagram seen through face (9, 10, 11):

========  =============  ==================
vertex    ring           angle (degrees)
========  =============  ==================
0, 1, 2   inner, r=38    60, 180, 300
3 .. 8    middle, r=88   0, 60, ..., 300
9, 10, 11 outer, r=190   0, 120, 240
========  =============  ==================

Angles run counter-clockwise from the positive x axis about (210, 210).
The table below holds the rounded coordinates, so output never depends on
floating-point formatting.
"""
from __future__ import annotations

import math
from typing import Iterable, Optional
from xml.sax.saxutils import escape

from .analysis import GoldenDecomposition
from .assignment import GoldenStructure
from .icosahedron import FigureKind, build_topology
from .pitch import name

WIDTH = HEIGHT = 420

VERTEX_POSITIONS: dict[int, tuple[float, float]] = {
    0: (229.0, 177.1),
    1: (172.0, 210.0),
    2: (229.0, 242.9),
    3: (298.0, 210.0),
    4: (254.0, 133.8),
    5: (166.0, 133.8),
    6: (122.0, 210.0),
    7: (166.0, 286.2),
    8: (254.0, 286.2),
    9: (400.0, 210.0),
    10: (115.0, 45.5),
    11: (115.0, 374.5),
}

COLORS = {
    FigureKind.TRIANGLE: "#e8743b",
    FigureKind.GNOMON: "#3b7de8",
    FigureKind.RECTANGLE: "#2ca25f",
}


def _polygon_order(vertices: Iterable[int]) -> list[int]:
    vs = sorted(vertices)
    cx = sum(VERTEX_POSITIONS[v][0] for v in vs) / len(vs)
    cy = sum(VERTEX_POSITIONS[v][1] for v in vs) / len(vs)
    return sorted(vs, key=lambda v: math.atan2(VERTEX_POSITIONS[v][1] - cy, VERTEX_POSITIONS[v][0] - cx))


def _points(vertices: Iterable[int]) -> str:
    return " ".join(f"{VERTEX_POSITIONS[v][0]:.1f},{VERTEX_POSITIONS[v][1]:.1f}" for v in vertices)


def render_svg(
    structure: GoldenStructure,
    decomposition: Optional[GoldenDecomposition] = None,
    title: str = "",
) -> str:
    """SVG 1.1 text; identical inputs give identical bytes."""
    if structure.assignment is None:
        raise ValueError("rendering needs a vertex assignment")
    assign = structure.assignment
    topo = build_topology()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
    ]
    if title:
        out.append(f'<title>{escape(title)}</title>')
    out.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>')
    if title:
        out.append(f'<text x="10" y="20" font-family="sans-serif" font-size="13">{escape(title)}</text>')
    out.append('<g stroke="#999999" stroke-width="1">')
    for a, b in sorted(topo.edges()):
        (x1, y1), (x2, y2) = VERTEX_POSITIONS[a], VERTEX_POSITIONS[b]
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}"/>')
    out.append("</g>")
    if decomposition is not None:
        out.append('<g fill-opacity="0.35" stroke-width="2.5">')
        for part in decomposition.parts:
            color = COLORS[part.kind]
            verts = _polygon_order(assign.vertices(part.pcs))
            label = f"{part.kind.value} {','.join(name(p) for p in sorted(part.pcs))}"
            out.append(
                f'<polygon class="{part.kind.value}" points="{_points(verts)}" fill="{color}" '
                f'stroke="{color}"><title>{escape(label)}</title></polygon>'
            )
        out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" text-anchor="middle">')
    for v in range(12):
        x, y = VERTEX_POSITIONS[v]
        pitch = name(assign.from_vertex[v])
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="12" fill="#ffffff" stroke="#333333"/>')
        out.append(f'<text x="{x:.1f}" y="{y + 4:.1f}">{escape(pitch)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
