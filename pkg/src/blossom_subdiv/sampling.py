"""Seeded random instances for verification and property tests.

Numerators and denominators stay in [-9, 9] (denominators nonzero): small
magnitudes keep big-integer growth bounded through the combinatorial
sums while still exercising signs, zeros, and degenerate domains.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import (
    DomainTriangle,
    MonomialCurve,
    MonomialSurface,
    ParamInterval,
    ParamRect,
    Point2,
    Point3,
)

_NONZERO = [k for k in range(-9, 10) if k != 0]


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice(_NONZERO))


def random_point3(rng: random.Random) -> Point3:
    return Point3(random_rational(rng), random_rational(rng), random_rational(rng))


def random_point2(rng: random.Random) -> Point2:
    return Point2(random_rational(rng), random_rational(rng))


def random_curve(rng: random.Random, max_degree: int) -> MonomialCurve:
    n = rng.randint(0, max_degree)
    return MonomialCurve(tuple(random_point3(rng) for _ in range(n + 1)))


def random_surface(rng: random.Random, max_degree_u: int, max_degree_v: int) -> MonomialSurface:
    n = rng.randint(0, max_degree_u)
    m = rng.randint(0, max_degree_v)
    return MonomialSurface(
        tuple(tuple(random_point3(rng) for _ in range(m + 1)) for _ in range(n + 1))
    )


def random_interval(rng: random.Random) -> ParamInterval:
    return ParamInterval(random_rational(rng), random_rational(rng))


def random_rect(rng: random.Random) -> ParamRect:
    return ParamRect(random_interval(rng), random_interval(rng))


def random_triangle(rng: random.Random) -> DomainTriangle:
    return DomainTriangle(random_point2(rng), random_point2(rng), random_point2(rng))
