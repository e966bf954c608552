"""Acceptance suite: one test per exit criterion, each printing a
pass/fail line. Every comparison is exact (zero tolerance); run with
`pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import csv
import io
import random
import time
from fractions import Fraction
from itertools import combinations

from blossom_subdiv import (
    MonomialCurve,
    MonomialSurface,
    Point2,
    barycentric_to_cartesian,
    blossom_curve,
    blossom_tensor,
    blossom_triangle,
    de_casteljau_tensor,
    de_casteljau_triangle,
    eval_monomial_curve,
    eval_monomial_surface,
    iter_placements,
    placement_count_u_first,
    placement_count_v_first,
    subdivide_tensor,
    subdivide_triangle,
)
from blossom_subdiv.bench import run_benchmark, write_csv
from blossom_subdiv.cli import main as cli_main
from blossom_subdiv.sampling import (
    random_point3,
    random_rational,
    random_rect,
    random_surface,
    random_triangle,
)

import golden


def report(number: int, label: str) -> None:
    print(f"[acceptance] criterion {number} ({label}): PASS")


def test_criterion_1_unit_square_net_reproduction():
    start = time.perf_counter()
    patch = subdivide_tensor(golden.SAMPLE_SURFACE, golden.UNIT_SQUARE)
    elapsed = time.perf_counter() - start
    expected = golden.net_points(golden.TPB_UNIT_SQUARE_NET)
    assert len(expected) == 12
    for (nu, mu), point in expected.items():
        assert patch.control_points[nu][mu] == point, (nu, mu)
    assert elapsed < 1.0
    report(1, "unit-square tensor net, 12 points exact")


def test_criterion_2_inner_rect_net_reproduction():
    patch = subdivide_tensor(golden.SAMPLE_SURFACE, golden.INNER_RECT)
    expected = golden.net_points(golden.TPB_INNER_RECT_NET)
    for (nu, mu), point in expected.items():
        assert patch.control_points[nu][mu] == point, (nu, mu)
    assert patch.control_points[0][0] == golden.p3("28/27", "983/2160", "3637/8640")
    report(2, "inner-rectangle tensor net exact incl. corner point")


def test_criterion_3_triangle_nets_reproduction():
    for tri, table in (
        (golden.UNIT_TRIANGLE, golden.TB_UNIT_TRIANGLE_TABLE),
        (golden.OFFSET_TRIANGLE, golden.TB_OFFSET_TRIANGLE_TABLE),
    ):
        patch = subdivide_triangle(golden.SAMPLE_SURFACE, tri)
        got = sorted(p.as_tuple() for _, _, p in patch.labelled_points())
        want = sorted(golden.p3(*coords).as_tuple() for coords in table.values())
        assert len(got) == 21
        assert got == want  # multiset equality of all 21 points
        n_total = patch.degree
        surface = golden.SAMPLE_SURFACE
        assert patch.point(n_total, 0) == eval_monomial_surface(surface, tri.va.s, tri.va.t)
        assert patch.point(0, n_total) == eval_monomial_surface(surface, tri.vb.s, tri.vb.t)
        assert patch.point(0, 0) == eval_monomial_surface(surface, tri.vc.s, tri.vc.t)
        # stronger than the multiset: per-index equality via the recorded
        # label mapping
        for (nu, mu), point in golden.tb_expected(table, n_total).items():
            assert patch.point(nu, mu) == point, (nu, mu)
    report(3, "triangular nets as 21-point multisets plus corner identification")


def test_criterion_4_oracle_equivalence_via_verify():
    start = time.perf_counter()
    code = cli_main(["verify", "--trials", "100", "--max-degree", "3", "--seed", "42"])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 60.0
    report(4, f"verify 100 trials exact in {elapsed:.1f}s")


def test_criterion_5_blossom_axiom_suite():
    instances = 50

    rng = random.Random(50001)
    for _ in range(instances):  # curve axioms
        n = rng.randint(1, 4)
        curve = MonomialCurve(tuple(random_point3(rng) for _ in range(n + 1)))
        args = [random_rational(rng) for _ in range(n)]
        shuffled = args[:]
        rng.shuffle(shuffled)
        assert blossom_curve(curve, shuffled) == blossom_curve(curve, args)
        slot = rng.randrange(n)
        alpha, x, y = (random_rational(rng) for _ in range(3))
        blended, with_x, with_y = args[:], args[:], args[:]
        blended[slot] = (1 - alpha) * x + alpha * y
        with_x[slot], with_y[slot] = x, y
        assert blossom_curve(curve, blended) == (1 - alpha) * blossom_curve(
            curve, with_x
        ) + alpha * blossom_curve(curve, with_y)
        t = random_rational(rng)
        assert blossom_curve(curve, [t] * n) == eval_monomial_curve(curve, t)

    rng = random.Random(50002)
    for _ in range(instances):  # tensor axioms
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        surface = MonomialSurface(
            tuple(tuple(random_point3(rng) for _ in range(m + 1)) for _ in range(n + 1))
        )
        u_args = [random_rational(rng) for _ in range(n)]
        v_args = [random_rational(rng) for _ in range(m)]
        u_shuffled, v_shuffled = u_args[:], v_args[:]
        rng.shuffle(u_shuffled)
        rng.shuffle(v_shuffled)
        assert blossom_tensor(surface, u_shuffled, v_shuffled) == blossom_tensor(
            surface, u_args, v_args
        )
        slot = rng.randrange(n)
        alpha, x, y = (random_rational(rng) for _ in range(3))
        blended, with_x, with_y = u_args[:], u_args[:], u_args[:]
        blended[slot] = (1 - alpha) * x + alpha * y
        with_x[slot], with_y[slot] = x, y
        assert blossom_tensor(surface, blended, v_args) == (1 - alpha) * blossom_tensor(
            surface, with_x, v_args
        ) + alpha * blossom_tensor(surface, with_y, v_args)
        u, v = random_rational(rng), random_rational(rng)
        assert blossom_tensor(surface, [u] * n, [v] * m) == eval_monomial_surface(
            surface, u, v
        )

    rng = random.Random(50003)
    for _ in range(instances):  # triangle axioms
        n, m = rng.randint(0, 4), rng.randint(0, 4)
        if n + m == 0:
            n = 1
        surface = MonomialSurface(
            tuple(tuple(random_point3(rng) for _ in range(m + 1)) for _ in range(n + 1))
        )
        total = n + m
        args = [Point2(random_rational(rng), random_rational(rng)) for _ in range(total)]
        shuffled = args[:]
        rng.shuffle(shuffled)
        assert blossom_triangle(surface, shuffled) == blossom_triangle(surface, args)
        slot = rng.randrange(total)
        alpha = random_rational(rng)
        p = Point2(random_rational(rng), random_rational(rng))
        q = Point2(random_rational(rng), random_rational(rng))
        blended, with_p, with_q = args[:], args[:], args[:]
        blended[slot] = (1 - alpha) * p + alpha * q
        with_p[slot], with_q[slot] = p, q
        assert blossom_triangle(surface, blended) == (1 - alpha) * blossom_triangle(
            surface, with_p
        ) + alpha * blossom_triangle(surface, with_q)
        u, v = random_rational(rng), random_rational(rng)
        assert blossom_triangle(surface, [Point2(u, v)] * total) == eval_monomial_surface(
            surface, u, v
        )
    report(5, "symmetry, multi-affinity, diagonal reduction x50 per kind")


def test_criterion_6_geometric_consistency():
    rng = random.Random(60001)
    grid = [Fraction(k, 4) for k in range(5)]
    bary = [(Fraction(p, 4), Fraction(q, 4)) for p in range(5) for q in range(5 - p)]
    assert len(bary) == 15
    for _ in range(20):
        surface = random_surface(rng, 3, 3)
        rect = random_rect(rng)
        patch = subdivide_tensor(surface, rect)
        a, b = rect.u_range.a, rect.u_range.b
        c, d = rect.v_range.a, rect.v_range.b
        for uu in grid:
            for vv in grid:
                assert de_casteljau_tensor(patch, uu, vv) == eval_monomial_surface(
                    surface, a + (b - a) * uu, c + (d - c) * vv
                )
        tri = random_triangle(rng)
        tri_patch = subdivide_triangle(surface, tri)
        for u, v in bary:
            spot = barycentric_to_cartesian(tri, u, v)
            assert de_casteljau_triangle(tri_patch, u, v) == eval_monomial_surface(
                surface, spot.s, spot.t
            )
    report(6, "de Casteljau of subdivided patches matches reparameterized evaluation")


def _zone_counts(nu, mu, lam):
    for i_a in range(nu + 1):
        for j_a in range(nu - i_a + 1):
            for i_b in range(mu + 1):
                for j_b in range(mu - i_b + 1):
                    for i_g in range(lam + 1):
                        for j_g in range(lam - i_g + 1):
                            yield (i_a, i_b, i_g, j_a, j_b, j_g)


def _literal_assignment_count(nu, mu, lam, counts):
    i_a, i_b, i_g, j_a, j_b, j_g = counts
    n_total = nu + mu + lam
    i, j = i_a + i_b + i_g, j_a + j_b + j_g
    zone = lambda k: 0 if k < nu else (1 if k < nu + mu else 2)
    found = 0
    for alpha in combinations(range(n_total), i):
        za = [0, 0, 0]
        for k in alpha:
            za[zone(k)] += 1
        if za != [i_a, i_b, i_g]:
            continue
        taken = set(alpha)
        for beta in combinations([k for k in range(n_total) if k not in taken], j):
            zb = [0, 0, 0]
            for k in beta:
                zb[zone(k)] += 1
            if zb == [j_a, j_b, j_g]:
                found += 1
    return found


def test_criterion_7_placement_count_groupings():
    for n_total in range(9):
        for nu in range(n_total + 1):
            for mu in range(n_total - nu + 1):
                lam = n_total - nu - mu
                for counts in _zone_counts(nu, mu, lam):
                    assert placement_count_u_first(
                        nu, mu, n_total, *counts
                    ) == placement_count_v_first(nu, mu, n_total, *counts)
    for n_total in range(6):
        for nu in range(n_total + 1):
            for mu in range(n_total - nu + 1):
                lam = n_total - nu - mu
                for counts in _zone_counts(nu, mu, lam):
                    literal = _literal_assignment_count(nu, mu, lam, counts)
                    assert placement_count_u_first(nu, mu, n_total, *counts) == literal
                    assert placement_count_v_first(nu, mu, n_total, *counts) == literal
    report(7, "both placement-count groupings equal, and equal literal enumeration")


def test_criterion_8_bounds_exhaustiveness():
    for n_total in range(7):
        for nu in range(n_total + 1):
            for mu in range(n_total - nu + 1):
                lam = n_total - nu - mu
                for i in range(n_total + 1):
                    for j in range(n_total - i + 1):
                        brute = set()
                        for i_a in range(n_total + 1):
                            for i_b in range(n_total + 1):
                                i_g = i - i_a - i_b
                                for j_a in range(n_total + 1):
                                    for j_b in range(n_total + 1):
                                        j_g = j - j_a - j_b
                                        if i_g < 0 or j_g < 0:
                                            continue
                                        if i_a + i_b > i or i_g > lam:
                                            continue
                                        if i_a + j_a > nu or i_b + j_b > mu:
                                            continue
                                        if j_g > lam - i_g:
                                            continue
                                        brute.add((i_a, i_b, i_g, j_a, j_b, j_g))
                        assert set(iter_placements(n_total, nu, mu, i, j)) == brute
    report(8, "loop bounds enumerate exactly the feasible zone splits")


def test_criterion_9_efficiency_signal():
    records, warnings = run_benchmark(["curve", "tpb", "tb"], [4], repeat=1)
    assert not warnings
    for shape in ("curve", "tpb", "tb"):
        label = "4" if shape == "curve" else "4x4"
        cell = {r.method: r for r in records if r.shape == shape and r.degrees == label}
        assert cell["closed-form"].term_count < cell["oracle"].term_count, shape

    # Ratio above 10x at degree (5, 5), read back from the CSV itself.
    records, warnings = run_benchmark(["tpb", "tb"], [5], repeat=1)
    assert not warnings
    buf = io.StringIO()
    write_csv(records, buf)
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    for shape in ("tpb", "tb"):
        counts = {
            row["method"]: int(row["term_count"])
            for row in rows
            if row["shape"] == shape and row["degrees"] == "5x5"
        }
        ratio = counts["oracle"] / counts["closed-form"]
        assert ratio > 10, (shape, ratio)
        wall = {
            row["method"]: int(row["wall_time_ns"])
            for row in rows
            if row["shape"] == shape and row["degrees"] == "5x5"
        }
        print(
            f"[acceptance]   {shape} 5x5: terms oracle/closed-form = {ratio:.1f}x, "
            f"wall {wall['oracle'] / 1e6:.0f}ms vs {wall['closed-form'] / 1e6:.0f}ms"
        )
    report(9, "closed form strictly cheaper; >10x term ratio at degree 5x5")
