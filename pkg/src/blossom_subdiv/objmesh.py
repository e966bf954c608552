"""Wavefront OBJ export of exactly evaluated geometry.

This is the one place rationals become floats: vertices are converted
round-to-nearest and printed with 17 significant digits, everything
upstream stays exact. Curves export as polylines, tensor patches as quad
grids, triangular patches as barycentric triangle grids; --with-net adds
the control net as line elements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .geometry import (
    BezierCurve,
    MonomialCurve,
    MonomialSurface,
    Point3,
    TensorPatch,
    TrianglePatch,
    de_casteljau_curve,
    de_casteljau_tensor,
    de_casteljau_triangle,
    eval_monomial_curve,
    eval_monomial_surface,
)

Meshable = Union[MonomialCurve, MonomialSurface, BezierCurve, TensorPatch, TrianglePatch]


def _fmt(value: Fraction) -> str:
    return format(float(value), ".17g")


def _vertex(p: Point3) -> str:
    return f"v {_fmt(p.x)} {_fmt(p.y)} {_fmt(p.z)}"


def _params(samples: int) -> list[Fraction]:
    return [Fraction(k, samples - 1) for k in range(samples)]


def _polyline(points: list[Point3], net: list[Point3] | None) -> list[str]:
    lines = ["g curve"]
    lines += [_vertex(p) for p in points]
    lines.append("l " + " ".join(str(k + 1) for k in range(len(points))))
    if net:
        base = len(points)
        lines.append("g control-net")
        lines += [_vertex(p) for p in net]
        lines.append("l " + " ".join(str(base + k + 1) for k in range(len(net))))
    return lines


def _quad_grid(grid: list[list[Point3]], net: list[list[Point3]] | None) -> list[str]:
    rows = len(grid)
    cols = len(grid[0])
    lines = ["g patch"]
    for row in grid:
        lines += [_vertex(p) for p in row]
    vid = lambda r, c: r * cols + c + 1
    for r in range(rows - 1):
        for c in range(cols - 1):
            lines.append(f"f {vid(r, c)} {vid(r + 1, c)} {vid(r + 1, c + 1)} {vid(r, c + 1)}")
    if net:
        base = rows * cols
        net_cols = len(net[0])
        lines.append("g control-net")
        for row in net:
            lines += [_vertex(p) for p in row]
        nid = lambda r, c: base + r * net_cols + c + 1
        for r in range(len(net)):
            lines.append("l " + " ".join(str(nid(r, c)) for c in range(net_cols)))
        for c in range(net_cols):
            lines.append("l " + " ".join(str(nid(r, c)) for r in range(len(net))))
    return lines


def _triangle_grid(patch: TrianglePatch, samples: int, with_net: bool) -> list[str]:
    n_rows = samples
    index = {}
    lines = ["g patch"]
    count = 0
    # Rows by the first barycentric weight; row r has samples - r points.
    for r in range(n_rows):
        u = Fraction(r, samples - 1)
        for c in range(n_rows - r):
            v = Fraction(c, samples - 1)
            lines.append(_vertex(de_casteljau_triangle(patch, u, v)))
            index[(r, c)] = count = count + 1
    for r in range(n_rows - 1):
        for c in range(n_rows - 1 - r):
            lines.append(f"f {index[(r, c)]} {index[(r + 1, c)]} {index[(r, c + 1)]}")
            if c + 1 < n_rows - 1 - r:
                lines.append(f"f {index[(r + 1, c)]} {index[(r + 1, c + 1)]} {index[(r, c + 1)]}")
    if with_net:
        lines.append("g control-net")
        base = count
        net_index = {}
        for nu, mu, p in patch.labelled_points():
            lines.append(_vertex(p))
            net_index[(nu, mu)] = base = base + 1
        for nu, mu, _ in patch.labelled_points():
            if nu + mu < patch.degree:
                lines.append(f"l {net_index[(nu, mu)]} {net_index[(nu + 1, mu)]}")
                lines.append(f"l {net_index[(nu, mu)]} {net_index[(nu, mu + 1)]}")
                lines.append(f"l {net_index[(nu + 1, mu)]} {net_index[(nu, mu + 1)]}")
    return lines


def mesh_document(obj: Meshable, samples: int, with_net: bool = False) -> str:
    """Tessellate to OBJ text.

    Monomial inputs are sampled over the unit domain; Bernstein patches
    over their own parameter domain. samples is the per-edge vertex count
    and must be at least 2 (2 reproduces just the corners).
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples per edge, got {samples}")
    ts = _params(samples)
    if isinstance(obj, MonomialCurve):
        lines = _polyline([eval_monomial_curve(obj, t) for t in ts], None)
    elif isinstance(obj, BezierCurve):
        net = list(obj.control_points) if with_net else None
        lines = _polyline([de_casteljau_curve(obj, t) for t in ts], net)
    elif isinstance(obj, MonomialSurface):
        grid = [[eval_monomial_surface(obj, u, v) for v in ts] for u in ts]
        lines = _quad_grid(grid, None)
    elif isinstance(obj, TensorPatch):
        grid = [[de_casteljau_tensor(obj, u, v) for v in ts] for u in ts]
        net = [list(row) for row in obj.control_points] if with_net else None
        lines = _quad_grid(grid, net)
    elif isinstance(obj, TrianglePatch):
        lines = _triangle_grid(obj, samples, with_net)
    else:
        raise TypeError(f"cannot mesh {type(obj).__name__}")
    return "\n".join(lines) + "\n"
