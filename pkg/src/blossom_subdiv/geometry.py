"""Monomial- and Bernstein-basis curve/surface types plus exact evaluators.

Evaluation here (Horner, de Casteljau, direct Bernstein sums) is the
geometric cross-check for the subdivision formulas: independent code
paths that must agree bit-for-bit on exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .numerics import (
    RATIONAL_ONE,
    RATIONAL_ZERO,
    Rational,
    as_rational,
    binomial,
    multinomial,
)


@dataclass(frozen=True)
class Point3:
    """Point or coefficient in R^3. Scalar-valued data uses y = z = 0."""

    x: Rational
    y: Rational
    z: Rational

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))
        object.__setattr__(self, "z", as_rational(self.z))

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, scalar) -> "Point3":
        s = as_rational(scalar)
        return Point3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[Rational, Rational, Rational]:
        return (self.x, self.y, self.z)


ZERO3 = Point3(RATIONAL_ZERO, RATIONAL_ZERO, RATIONAL_ZERO)


@dataclass(frozen=True)
class Point2:
    """Parameter-plane point, e.g. a domain-triangle vertex."""

    s: Rational
    t: Rational

    def __post_init__(self):
        object.__setattr__(self, "s", as_rational(self.s))
        object.__setattr__(self, "t", as_rational(self.t))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.s + other.s, self.t + other.t)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.s - other.s, self.t - other.t)

    def __mul__(self, scalar) -> "Point2":
        r = as_rational(scalar)
        return Point2(self.s * r, self.t * r)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ParamInterval:
    """Subdivision interval [a, b]. a == b (degenerate) and a > b
    (reversed orientation) are both allowed; the formulas stay valid."""

    a: Rational
    b: Rational

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))


@dataclass(frozen=True)
class ParamRect:
    u_range: ParamInterval
    v_range: ParamInterval


@dataclass(frozen=True)
class DomainTriangle:
    """Parameter-plane triangle. Collinear vertices are representable
    (the formulas remain well-defined); policy about warning on them
    lives at the CLI boundary, not here."""

    va: Point2
    vb: Point2
    vc: Point2

    def is_degenerate(self) -> bool:
        """True when the three vertices are collinear."""
        d1 = self.vb - self.va
        d2 = self.vc - self.va
        return d1.s * d2.t - d1.t * d2.s == 0


@dataclass(frozen=True)
class MonomialCurve:
    """Polynomial curve sum(coeffs[i] * u**i), degree = len(coeffs) - 1."""

    coeffs: tuple[Point3, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("curve needs at least the constant coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class MonomialSurface:
    """Polynomial surface sum(coeffs[i][j] * u**i * v**j), i-major grid."""

    coeffs: tuple[tuple[Point3, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.coeffs)
        object.__setattr__(self, "coeffs", rows)
        if not rows or not rows[0]:
            raise ValueError("surface needs a non-empty coefficient grid")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("surface coefficient grid must be rectangular")

    @property
    def degrees(self) -> tuple[int, int]:
        return (len(self.coeffs) - 1, len(self.coeffs[0]) - 1)


@dataclass(frozen=True)
class BezierCurve:
    """Bernstein-form curve over its subdivision interval."""

    control_points: tuple[Point3, ...]

    def __post_init__(self):
        object.__setattr__(self, "control_points", tuple(self.control_points))
        if not self.control_points:
            raise ValueError("Bezier curve needs at least one control point")

    @property
    def degree(self) -> int:
        return len(self.control_points) - 1


@dataclass(frozen=True)
class TensorPatch:
    """Tensor-product Bernstein patch; domain kept as provenance."""

    control_points: tuple[tuple[Point3, ...], ...]
    domain: ParamRect

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.control_points)
        object.__setattr__(self, "control_points", rows)
        if not rows or not rows[0]:
            raise ValueError("tensor patch needs a non-empty control grid")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("tensor patch control grid must be rectangular")

    @property
    def degrees(self) -> tuple[int, int]:
        return (len(self.control_points) - 1, len(self.control_points[0]) - 1)


@dataclass(frozen=True)
class TrianglePatch:
    """Triangular Bernstein patch of total degree N.

    rows[nu][mu] holds the control point whose defining arguments take nu
    copies of vertex va, mu copies of vb, and N-nu-mu copies of vc; row nu
    has N-nu+1 entries, (N+1)(N+2)/2 points in total.
    """

    rows: tuple[tuple[Point3, ...], ...]
    domain: DomainTriangle

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("triangle patch needs at least one control point")
        n_total = len(rows) - 1
        for nu, row in enumerate(rows):
            if len(row) != n_total - nu + 1:
                raise ValueError(
                    f"triangle patch row {nu} must hold {n_total - nu + 1} points, got {len(row)}"
                )

    @property
    def degree(self) -> int:
        return len(self.rows) - 1

    def point(self, nu: int, mu: int) -> Point3:
        if nu < 0 or mu < 0 or nu + mu > self.degree:
            raise IndexError(f"invalid triangle index ({nu}, {mu}) for degree {self.degree}")
        return self.rows[nu][mu]

    def labelled_points(self) -> Iterator[tuple[int, int, Point3]]:
        """Row-major (nu, mu, point) triples."""
        for nu, row in enumerate(self.rows):
            for mu, p in enumerate(row):
                yield nu, mu, p


def eval_monomial_curve(curve: MonomialCurve, u: Rational) -> Point3:
    """Horner evaluation of the monomial form; exact."""
    u = as_rational(u)
    acc = curve.coeffs[-1]
    for coeff in reversed(curve.coeffs[:-1]):
        acc = acc * u + coeff
    return acc


def eval_monomial_surface(surface: MonomialSurface, u: Rational, v: Rational) -> Point3:
    """Nested Horner over the i-major coefficient grid; exact."""
    u = as_rational(u)
    v = as_rational(v)
    rows = []
    for row in surface.coeffs:
        acc = row[-1]
        for coeff in reversed(row[:-1]):
            acc = acc * v + coeff
        rows.append(acc)
    acc = rows[-1]
    for value in reversed(rows[:-1]):
        acc = acc * u + value
    return acc


def bernstein(n: int, k: int, t: Rational) -> Rational:
    """Degree-n Bernstein basis value C(n,k) t^k (1-t)^(n-k), exact."""
    t = as_rational(t)
    return binomial(n, k) * t**k * (RATIONAL_ONE - t) ** (n - k)


def triangle_bernstein(n_total: int, nu: int, mu: int, u: Rational, v: Rational) -> Rational:
    """Bivariate Bernstein basis with barycentric weights (u, v, 1-u-v)."""
    u = as_rational(u)
    v = as_rational(v)
    w = RATIONAL_ONE - u - v
    return multinomial(n_total, nu, mu) * u**nu * v**mu * w ** (n_total - nu - mu)


def de_casteljau_points(points: Sequence[Point3], t: Rational) -> Point3:
    """Repeated affine interpolation on a row of control points."""
    t = as_rational(t)
    s = RATIONAL_ONE - t
    layer = list(points)
    while len(layer) > 1:
        layer = [s * layer[k] + t * layer[k + 1] for k in range(len(layer) - 1)]
    return layer[0]


def de_casteljau_curve(bezier: BezierCurve, t: Rational) -> Point3:
    """Bernstein-form curve value at t; agrees exactly with the direct
    basis summation (tested as an invariant)."""
    return de_casteljau_points(bezier.control_points, t)


def de_casteljau_tensor(patch: TensorPatch, u: Rational, v: Rational) -> Point3:
    """Curve de Casteljau per row (v direction), then once on the column."""
    column = [de_casteljau_points(row, v) for row in patch.control_points]
    return de_casteljau_points(column, u)


def de_casteljau_triangle(patch: TrianglePatch, u: Rational, v: Rational) -> Point3:
    """Triangular de Casteljau with barycentric weights (u, v, 1-u-v).

    Weight u pulls toward the nu index direction (vertex va), v toward mu
    (vertex vb), so (1,0) returns the pure-va corner, (0,1) the pure-vb
    corner, and (0,0) the pure-vc corner.
    """
    u = as_rational(u)
    v = as_rational(v)
    w = RATIONAL_ONE - u - v
    layer = {(nu, mu): p for nu, mu, p in patch.labelled_points()}
    for level in range(patch.degree, 0, -1):
        layer = {
            (nu, mu): u * layer[(nu + 1, mu)] + v * layer[(nu, mu + 1)] + w * layer[(nu, mu)]
            for nu in range(level)
            for mu in range(level - nu)
        }
    return layer[(0, 0)]


def barycentric_to_cartesian(tri: DomainTriangle, u: Rational, v: Rational) -> Point2:
    """Affine combination u*va + v*vb + (1-u-v)*vc."""
    u = as_rational(u)
    v = as_rational(v)
    return u * tri.va + v * tri.vb + (RATIONAL_ONE - u - v) * tri.vc
