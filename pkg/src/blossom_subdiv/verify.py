"""Randomized equivalence check: closed-form control points against the
brute-force blossom oracle, compared exactly."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from . import documents
from .geometry import DomainTriangle, ParamInterval, ParamRect
from .oracle import blossom_curve, blossom_tensor, blossom_triangle
from .sampling import random_curve, random_interval, random_rect, random_surface, random_triangle
from .subdivision import subdivide_curve, subdivide_tensor, subdivide_triangle


@dataclass
class Mismatch:
    shape: str
    trial: int
    index: tuple[int, ...]
    closed_form: list[str]
    oracle: list[str]
    instance: dict


@dataclass
class VerifyReport:
    trials: int
    checked_points: dict[str, int] = field(default_factory=dict)
    mismatch: Optional[Mismatch] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def _point_strings(p) -> list[str]:
    return [str(p.x), str(p.y), str(p.z)]


def _check_curve(curve, interval: ParamInterval, trial: int) -> Optional[Mismatch]:
    n = curve.degree
    result = subdivide_curve(curve, interval)
    for nu, got in enumerate(result.control_points):
        args = (interval.b,) * nu + (interval.a,) * (n - nu)
        want = blossom_curve(curve, args)
        if got != want:
            doc = documents.curve_document(curve)
            doc["domain"] = {"a": str(interval.a), "b": str(interval.b)}
            return Mismatch("curve", trial, (nu,), _point_strings(got), _point_strings(want), doc)
    return None


def _check_tensor(surface, rect: ParamRect, trial: int) -> Optional[Mismatch]:
    n, m = surface.degrees
    result = subdivide_tensor(surface, rect)
    a, b = rect.u_range.a, rect.u_range.b
    c, d = rect.v_range.a, rect.v_range.b
    for nu in range(n + 1):
        for mu in range(m + 1):
            got = result.control_points[nu][mu]
            want = blossom_tensor(
                surface, (b,) * nu + (a,) * (n - nu), (d,) * mu + (c,) * (m - mu)
            )
            if got != want:
                doc = documents.surface_document(surface)
                doc["domain"] = {"a": str(a), "b": str(b), "c": str(c), "d": str(d)}
                return Mismatch(
                    "tpb", trial, (nu, mu), _point_strings(got), _point_strings(want), doc
                )
    return None


def _check_triangle(surface, tri: DomainTriangle, trial: int) -> Optional[Mismatch]:
    n, m = surface.degrees
    n_total = n + m
    result = subdivide_triangle(surface, tri)
    for nu, mu, got in result.labelled_points():
        args = (tri.va,) * nu + (tri.vb,) * mu + (tri.vc,) * (n_total - nu - mu)
        want = blossom_triangle(surface, args)
        if got != want:
            doc = documents.surface_document(surface)
            doc["domain"] = {
                "va": [str(tri.va.s), str(tri.va.t)],
                "vb": [str(tri.vb.s), str(tri.vb.t)],
                "vc": [str(tri.vc.s), str(tri.vc.t)],
            }
            return Mismatch(
                "tb", trial, (nu, mu), _point_strings(got), _point_strings(want), doc
            )
    return None


def run_verification(trials: int, max_degree: int, seed: int) -> VerifyReport:
    """Draw random instances per shape and compare every control point.

    Stops at the first mismatch; a mismatch means a bug in one of the two
    code paths, never acceptable numeric noise (everything is exact).
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if max_degree < 0:
        raise ValueError(f"max degree must be non-negative, got {max_degree}")
    rng = random.Random(seed)
    report = VerifyReport(trials=trials, checked_points={"curve": 0, "tpb": 0, "tb": 0})
    for trial in range(trials):
        curve = random_curve(rng, max_degree)
        interval = random_interval(rng)
        mismatch = _check_curve(curve, interval, trial)
        if mismatch:
            report.mismatch = mismatch
            return report
        report.checked_points["curve"] += curve.degree + 1

        surface = random_surface(rng, max_degree, max_degree)
        rect = random_rect(rng)
        mismatch = _check_tensor(surface, rect, trial)
        if mismatch:
            report.mismatch = mismatch
            return report
        n, m = surface.degrees
        report.checked_points["tpb"] += (n + 1) * (m + 1)

        surface = random_surface(rng, max_degree, max_degree)
        tri = random_triangle(rng)
        mismatch = _check_triangle(surface, tri, trial)
        if mismatch:
            report.mismatch = mismatch
            return report
        n, m = surface.degrees
        n_total = n + m
        report.checked_points["tb"] += (n_total + 1) * (n_total + 2) // 2
    return report
