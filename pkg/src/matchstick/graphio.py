"""JSON graph files and SVG drawings.

A graph file is a JSON object::

    {"vertices": [[x, y], ...], "edges": [[i, j], ...],
     "lattice": [[a, b], ...], "tolerance": 1e-9}

``lattice`` and ``tolerance`` are optional.  When ``lattice`` is present it
takes precedence over ``vertices`` (which may then be omitted), so files
written from lattice constructions round-trip without rounding.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Sequence, Tuple

from matchstick.geometry import LatticePoint, PlanePoint, Tolerance, lattice_to_cartesian
from matchstick.planegraph import EmbeddedGraph

STROKE = 0.05
PADDING = 0.6
PENNY_RADIUS = 0.5


class ParseError(ValueError):
    pass


def _pairs(data, name, kind):
    if not isinstance(data, list):
        raise ParseError(f"'{name}' must be a list")
    out = []
    for k, item in enumerate(data):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"'{name}[{k}]' must be a pair")
        if kind is int:
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in item):
                raise ParseError(f"'{name}[{k}]' must hold integers")
        elif not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item):
            raise ParseError(f"'{name}[{k}]' must hold numbers")
        out.append((kind(item[0]), kind(item[1])))
    return out


def graph_from_dict(data) -> Tuple[EmbeddedGraph, Optional[Tolerance]]:
    if not isinstance(data, dict):
        raise ParseError("graph file must hold a JSON object")
    edges = _pairs(data.get("edges", []), "edges", int)
    lattice = data.get("lattice")
    raw_vertices = data.get("vertices")
    if lattice is not None:
        points = [LatticePoint(a, b) for a, b in _pairs(lattice, "lattice", int)]
        if raw_vertices is not None and len(raw_vertices) != len(points):
            raise ParseError("'lattice' and 'vertices' differ in length")
        vertices = [lattice_to_cartesian(p) for p in points]
    elif raw_vertices is not None:
        vertices = [PlanePoint(x, y) for x, y in _pairs(raw_vertices, "vertices", float)]
    else:
        raise ParseError("graph file needs 'vertices' or 'lattice'")
    tol = None
    if data.get("tolerance") is not None:
        try:
            tol = Tolerance(float(data["tolerance"]))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad tolerance: {exc}") from exc
    try:
        graph = EmbeddedGraph(tuple(vertices), tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return graph, tol


def load_graph(path) -> Tuple[EmbeddedGraph, Optional[Tolerance]]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return graph_from_dict(data)


def graph_to_dict(g: EmbeddedGraph, tol: Optional[Tolerance] = None) -> dict:
    data = {
        "vertices": [[v.x, v.y] for v in g.vertices],
        "edges": [[i, j] for i, j in g.edges],
    }
    if g.vertices and g.is_lattice:
        data["lattice"] = [[v.exact.a, v.exact.b] for v in g.vertices]
    if tol is not None:
        data["tolerance"] = tol.eps
    return data


def save_graph(g: EmbeddedGraph, path, tol: Optional[Tolerance] = None) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g, tol), indent=1) + "\n")


def _num(v: float) -> str:
    text = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(g: EmbeddedGraph, pennies: bool = False) -> str:
    """SVG 1.1 drawing in graph units, y axis pointing up on screen."""
    pts: Sequence[PlanePoint] = g.vertices
    if pts:
        xs = [p.x for p in pts]
        ys = [-p.y for p in pts]
        x0, y0 = min(xs) - PADDING, min(ys) - PADDING
        w, h = max(xs) - min(xs) + 2 * PADDING, max(ys) - min(ys) + 2 * PADDING
    else:
        xs, ys = [], []
        x0 = y0 = -PADDING
        w = h = 2 * PADDING
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" '
        f'width="{_num(w * 100)}" height="{_num(h * 100)}">',
    ]
    if pennies:
        lines.append(f'<g fill="none" stroke="#808080" stroke-width="{_num(STROKE / 2)}">')
        for x, y in zip(xs, ys):
            lines.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(PENNY_RADIUS)}"/>')
        lines.append("</g>")
    lines.append(f'<g stroke="black" stroke-width="{_num(STROKE)}" stroke-linecap="round">')
    for i, j in g.edges:
        lines.append(
            f'<line x1="{_num(xs[i])}" y1="{_num(ys[i])}" x2="{_num(xs[j])}" y2="{_num(ys[j])}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="black">')
    for x, y in zip(xs, ys):
        lines.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(STROKE)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
