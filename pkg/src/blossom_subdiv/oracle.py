"""Brute-force blossom evaluation by literal enumeration of distinct-index
subsets.

This module is the ground truth the closed-form subdivision is checked
against, so it deliberately shares no code with that path and does no
memoization or pruning: combinatorial cost is the price of trust.
"""

from __future__ import annotations

from itertools import combinations
from math import prod
from typing import Optional, Sequence

from .numerics import (
    RATIONAL_ONE,
    RATIONAL_ZERO,
    Rational,
    TermCounter,
    binomial,
    multinomial,
)
from .geometry import MonomialCurve, MonomialSurface, Point2, Point3, ZERO3

# Blossom argument bundles. Lengths must match the polynomial's degree(s);
# the evaluation functions enforce that.
CurveBlossomArgs = Sequence[Rational]
TensorBlossomArgs = tuple[Sequence[Rational], Sequence[Rational]]
TriangleBlossomArgs = Sequence[Point2]


def monomial_blossom_curve(
    i: int, values: CurveBlossomArgs, counter: Optional[TermCounter] = None
) -> Rational:
    """Blossom of u**i at the given n arguments.

    Averages the products over all i-element index subsets of {1..n};
    the empty subset makes the i = 0 case exactly 1.
    """
    n = len(values)
    if i < 0 or i > n:
        raise ValueError(f"monomial index {i} out of range for {n} arguments")
    total = RATIONAL_ZERO
    visited = 0
    for subset in combinations(range(n), i):
        total += prod((values[k] for k in subset), start=RATIONAL_ONE)
        visited += 1
    if counter is not None:
        counter.add(visited)
    return total / binomial(n, i)


def blossom_curve(
    curve: MonomialCurve, values: CurveBlossomArgs, counter: Optional[TermCounter] = None
) -> Point3:
    """Coefficient-weighted sum of monomial blossoms."""
    n = curve.degree
    if len(values) != n:
        raise ValueError(f"curve blossom needs {n} arguments, got {len(values)}")
    acc = ZERO3
    for i, coeff in enumerate(curve.coeffs):
        acc = acc + monomial_blossom_curve(i, values, counter) * coeff
    return acc


def monomial_blossom_tensor(
    i: int,
    j: int,
    u_values: Sequence[Rational],
    v_values: Sequence[Rational],
    counter: Optional[TermCounter] = None,
) -> Rational:
    """Blossom of u**i v**j: the product of the two univariate blossoms.

    The product factorization is the production path; the equivalent raw
    double-subset enumeration lives in the test suite, where the equality
    of the two is asserted rather than shipped twice.
    """
    return monomial_blossom_curve(i, u_values, counter) * monomial_blossom_curve(
        j, v_values, counter
    )


def blossom_tensor(
    surface: MonomialSurface,
    u_values: Sequence[Rational],
    v_values: Sequence[Rational],
    counter: Optional[TermCounter] = None,
) -> Point3:
    n, m = surface.degrees
    if len(u_values) != n or len(v_values) != m:
        raise ValueError(
            f"tensor blossom needs ({n}, {m}) arguments, got ({len(u_values)}, {len(v_values)})"
        )
    acc = ZERO3
    for i, row in enumerate(surface.coeffs):
        for j, coeff in enumerate(row):
            acc = acc + monomial_blossom_tensor(i, j, u_values, v_values, counter) * coeff
    return acc


def monomial_blossom_triangle(
    i: int, j: int, points: TriangleBlossomArgs, counter: Optional[TermCounter] = None
) -> Rational:
    """Bivariate blossom of u**i v**j at N = len(points) arguments.

    Enumerates every ordered pair of disjoint index subsets (size i for
    the first coordinates, size j for the second) in lexicographic order
    and divides by the multinomial count. With i = 0 or j = 0 this
    reduces to the univariate blossom over the matching coordinate.
    """
    n_total = len(points)
    if i < 0 or j < 0 or i + j > n_total:
        raise ValueError(
            f"monomial indices ({i}, {j}) out of range for {n_total} arguments"
        )
    total = RATIONAL_ZERO
    pairs = 0
    indices = range(n_total)
    for alpha in combinations(indices, i):
        taken = set(alpha)
        u_part = prod((points[k].s for k in alpha), start=RATIONAL_ONE)
        remaining = [k for k in indices if k not in taken]
        for beta in combinations(remaining, j):
            total += u_part * prod((points[k].t for k in beta), start=RATIONAL_ONE)
            pairs += 1
    if counter is not None:
        counter.add(pairs)
    return total / multinomial(n_total, i, j)


def blossom_triangle(
    surface: MonomialSurface, points: TriangleBlossomArgs, counter: Optional[TermCounter] = None
) -> Point3:
    n, m = surface.degrees
    if len(points) != n + m:
        raise ValueError(
            f"triangle blossom needs {n + m} arguments, got {len(points)}"
        )
    acc = ZERO3
    for i, row in enumerate(surface.coeffs):
        for j, coeff in enumerate(row):
            acc = acc + monomial_blossom_triangle(i, j, points, counter) * coeff
    return acc
