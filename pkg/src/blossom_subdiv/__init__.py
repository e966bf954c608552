"""Exact-arithmetic subdivision of polynomial curves and surfaces into
Bernstein form, with a brute-force blossom oracle for cross-checking."""

from .numerics import Rational, binomial, multinomial, parse_rational, format_rational
from .geometry import (
    BezierCurve,
    DomainTriangle,
    MonomialCurve,
    MonomialSurface,
    ParamInterval,
    ParamRect,
    Point2,
    Point3,
    TensorPatch,
    TrianglePatch,
    barycentric_to_cartesian,
    de_casteljau_curve,
    de_casteljau_tensor,
    de_casteljau_triangle,
    eval_monomial_curve,
    eval_monomial_surface,
)
from .oracle import (
    blossom_curve,
    blossom_tensor,
    blossom_triangle,
    monomial_blossom_curve,
    monomial_blossom_tensor,
    monomial_blossom_triangle,
)
from .subdivision import (
    TriangularLoopBounds,
    iter_placements,
    placement_count_u_first,
    placement_count_v_first,
    subdivide_curve,
    subdivide_tensor,
    subdivide_triangle,
    triangular_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "binomial",
    "multinomial",
    "parse_rational",
    "format_rational",
    "Point2",
    "Point3",
    "ParamInterval",
    "ParamRect",
    "DomainTriangle",
    "MonomialCurve",
    "MonomialSurface",
    "BezierCurve",
    "TensorPatch",
    "TrianglePatch",
    "eval_monomial_curve",
    "eval_monomial_surface",
    "de_casteljau_curve",
    "de_casteljau_tensor",
    "de_casteljau_triangle",
    "barycentric_to_cartesian",
    "blossom_curve",
    "blossom_tensor",
    "blossom_triangle",
    "monomial_blossom_curve",
    "monomial_blossom_tensor",
    "monomial_blossom_triangle",
    "subdivide_curve",
    "subdivide_tensor",
    "subdivide_triangle",
    "triangular_bounds",
    "TriangularLoopBounds",
    "iter_placements",
    "placement_count_u_first",
    "placement_count_v_first",
    "__version__",
]
