import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from approxpoly.bodies import Parabola
from approxpoly.errors import (ConeMismatch, DimensionMismatch, EmptyPolyhedron, InvalidInput,
                               NegativeOffset, PointNotInBody, RayInsideCone)
from approxpoly.hausdorff import (cones_equal, directed_distance, hausdorff_distance,
                                  ray_level_search, ray_level_search_report, recession_escape,
                                  scaling_bound_check, truncated_with_cone, truncation_radius)
from approxpoly.norms import SUM, SUP
from approxpoly.outcomes import Finite, Infinite
from approxpoly.polyhedra import (HPolyhedron, VPolyhedron, cone_contains, hrep_of, point_distance,
                                  recession_cone)

from generators import polyhedron_pair, polytope_plus_cone

SQUARE = HPolyhedron.from_rows(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])


def H(dim, rows):
    return HPolyhedron.from_rows(dim, rows)


def test_identical_sets_are_at_distance_zero():
    assert hausdorff_distance(SQUARE, SQUARE) == Finite(0, hausdorff_distance(SQUARE, SQUARE).point)


def test_half_plane_against_cone_escapes_along_x():
    P = H(2, [((0, -1), 0)])
    Q = H(2, [((1, -1), 0), ((-1, -1), 0)])
    out = directed_distance(P, Q)
    assert isinstance(out, Infinite)
    w = out.witness
    assert cone_contains(recession_cone(P), w) and not cone_contains(recession_cone(Q), w)
    assert hausdorff_distance(P, Q) == Infinite((1, 0)) or hausdorff_distance(P, Q) == Infinite((-1, 0))


def test_parallel_rays_one_apart():
    P = VPolyhedron.make([(0, 1)], [(1, 0)])
    Q = VPolyhedron.make([(0, 0)], [(1, 0)])
    assert directed_distance(P, Q).value == 1
    assert hausdorff_distance(P, Q).value == 1
    assert hausdorff_distance(P, Q, SUM).value == 1


def test_square_against_centre():
    origin = VPolyhedron.make([(0, 0)])
    assert hausdorff_distance(SQUARE, origin).value == 1
    assert hausdorff_distance(SQUARE, origin, SUM).value == 2


def test_parabola_cone_against_wedge():
    P = H(2, [((1, 0), 0), ((-1, 0), 0), ((0, -1), 0)])
    Q = H(2, [((1, -1), 0), ((-1, -1), 0)])
    out = hausdorff_distance(P, Q)
    assert isinstance(out, Infinite)
    assert out.witness in ((1, 1), (-1, 1))


def test_empty_and_mismatched_inputs():
    empty = H(1, [((1,), 0), ((-1,), -1)])
    with pytest.raises(EmptyPolyhedron):
        hausdorff_distance(empty, H(1, []))
    with pytest.raises(DimensionMismatch):
        hausdorff_distance(SQUARE, H(1, []))


def brute_directed(P, Q, norm, rng, samples=60):
    """Lower bound on sup_{x in P} dist(x, Q) from random points of P."""
    best = F(0)
    for _ in range(samples):
        w = [F(rng.randint(1, 8)) for _ in P.points]
        s = sum(w)
        x = [sum(wi * p[k] for wi, p in zip(w, P.points)) / s for k in range(P.dim)]
        for r in P.rays:
            t = F(rng.randint(0, 6))
            x = [a + t * b for a, b in zip(x, r)]
        best = max(best, point_distance(tuple(x), hrep_of(Q), norm))
    return best


@pytest.mark.parametrize("seed", range(12))
def test_vertex_maximum_dominates_sampling(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    P = polytope_plus_cone(rng, n)
    Q = VPolyhedron(n, tuple(polytope_plus_cone(rng, n).points), P.rays)
    for norm in (SUP, SUM):
        d = directed_distance(P, Q, norm)
        assert isinstance(d, Finite)
        assert brute_directed(P, Q, norm, rng) <= d.value
        assert point_distance(d.point, hrep_of(Q), norm) == d.value


@pytest.mark.parametrize("seed", range(40))
def test_finite_iff_cones_equal(seed):
    rng = random.Random(1000 + seed)
    P, Q, equal = polyhedron_pair(rng, rng.randint(2, 4), shared=seed % 2 == 0)
    out = hausdorff_distance(P, Q)
    assert isinstance(out, Finite) == equal
    if not equal:
        w = out.witness
        inP, inQ = cone_contains(recession_cone(P), w), cone_contains(recession_cone(Q), w)
        assert inP != inQ


@pytest.mark.parametrize("seed", range(10))
def test_metric_on_common_cone(seed):
    rng = random.Random(2000 + seed)
    n = 2
    A = polytope_plus_cone(rng, n)
    B = VPolyhedron(n, polytope_plus_cone(rng, n).points, A.rays)
    C = VPolyhedron(n, polytope_plus_cone(rng, n).points, A.rays)
    ab, ba = hausdorff_distance(A, B), hausdorff_distance(B, A)
    assert ab.value == ba.value
    assert ab.value <= hausdorff_distance(A, C).value + hausdorff_distance(C, B).value


def test_cones_equal_helper():
    K = VPolyhedron.cone([(1, 1), (-1, 1)])
    assert cones_equal(K, hrep_of(K))
    assert recession_escape(K, VPolyhedron.cone([(1, 1)])) is not None


# ---------------------------------------------------------------- ray search

def test_ray_search_unit_ball():
    assert ray_level_search((0, 0), (1, 0), 2, SQUARE) == 3


def test_ray_search_half_plane():
    assert ray_level_search((0, 0), (0, 1), 5, H(2, [((0, 1), 0)])) == 5


def test_ray_search_parabola_quartic_root():
    # sup distance from (t, 0) is the s with (t - s)^2 = s; s = 1 at t = 2
    t = ray_level_search((0, 0), (1, 0), 1, Parabola())
    assert t == 2


@given(st.fractions(min_value=F(1, 4), max_value=6, max_denominator=8))
def test_ray_search_parabola_bracket(eps):
    tol = F(1, 10**8)
    R = ray_level_search_report((0, 0), (1, 0), eps, Parabola(), tol)
    lo, hi = Parabola().distance_bounds((R.t, 0), SUP, tol)
    assert hi <= eps + tol and lo >= eps - 3 * tol
    assert any(t < R.t and ok for t, ok in R.probes)


def test_ray_search_errors():
    with pytest.raises(RayInsideCone):
        ray_level_search((0, 0), (0, 1), 1, Parabola())
    with pytest.raises(PointNotInBody):
        ray_level_search((5, 0), (1, 0), 1, Parabola())
    with pytest.raises(RayInsideCone):
        ray_level_search((0, 0), (0, -1), 1, H(2, [((0, 1), 0)]))
    with pytest.raises(InvalidInput):
        ray_level_search((0, 0), (1, 0), 0, SQUARE)


# ---------------------------------------------------------------- truncation

def test_truncation_segment_plus_ray():
    A = H(2, [((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
    K = recession_cone(A)
    r, A_r = truncation_radius(A, K, F(1, 2))
    assert r <= 1
    assert hausdorff_distance(A_r, A).value <= F(1, 2)
    assert hausdorff_distance(truncated_with_cone(A, K, 1), A).value == 0


def test_truncation_of_cone_is_immediate():
    K = H(2, [((1, -1), 0), ((-1, -1), 0)])
    r, A_r = truncation_radius(K, K, F(1, 3))
    assert r == 0 and hausdorff_distance(A_r, K).value == 0


def test_truncation_square():
    sq = H(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
    origin_cone = H(2, [((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    r, A_r = truncation_radius(sq, origin_cone, F(1, 2))
    assert r <= 1 and hausdorff_distance(A_r, sq).value <= F(1, 2)
    assert hausdorff_distance(truncated_with_cone(sq, origin_cone, 1), sq).value == 0


def test_truncation_cone_mismatch():
    with pytest.raises(ConeMismatch):
        truncation_radius(SQUARE, H(2, [((0, 1), 0)]), 1)


# ---------------------------------------------------------------- offset scaling

def test_scaling_examples():
    fs = [(1, 0), (0, 1)]
    assert scaling_bound_check(fs, (0, 0)) == (0, 0)
    lhs, rhs = scaling_bound_check(fs, (1, 1))
    assert lhs == rhs
    lhs, rhs = scaling_bound_check(fs, (2, 3))
    assert lhs <= rhs == 3
    with pytest.raises(NegativeOffset):
        scaling_bound_check(fs, (-1, 0))
