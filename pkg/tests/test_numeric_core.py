from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from approxpoly.errors import DimensionMismatch, EmptyPolyhedron, InvalidInput
from approxpoly.lp import Infeasible, LPProblem, Optimal, Unbounded, lp_solve
from approxpoly.norms import SUM, SUP, Norm, as_norm
from approxpoly.outcomes import Finite, PlusInfinity
from approxpoly.polyhedra import HPolyhedron, point_distance, support_value
from approxpoly.rational import dot, fmt, q, sqrt_bounds

from conftest import polytopes, small, vectors

UNIT_SQUARE = HPolyhedron.from_rows(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])


def test_lp_single_bound():
    out = lp_solve(LPProblem.make((1,), [((1,), 1)], "max"))
    assert isinstance(out, Optimal) and out.value == 1 and out.point == (1,)


def test_lp_unbounded_ray():
    out = lp_solve(LPProblem.make((1,), [((-1,), 0)], "max"))
    assert isinstance(out, Unbounded) and out.ray[0] > 0


def test_lp_box_corner():
    out = lp_solve(LPProblem.make((1, 1), [((1, 0), F(1, 3)), ((0, 1), F(1, 7))], "max"))
    assert out.value == F(10, 21) and out.point == (F(1, 3), F(1, 7))


def test_lp_infeasible():
    out = lp_solve(LPProblem.make((1,), [((1,), 0), ((-1,), -1)], "max"))
    assert isinstance(out, Infeasible)


def test_lp_rejects_ragged_rows():
    with pytest.raises(DimensionMismatch):
        lp_solve(LPProblem.make((1, 1), [((1,), 0)], "max"))


def test_lp_minimise():
    out = lp_solve(LPProblem.make((1, 2), [((-1, 0), -1), ((0, -1), -2)], "min"))
    assert out.value == 5


@given(polytopes(n=2), vectors(2))
def test_optimal_value_matches_dual(P, c):
    out = lp_solve(LPProblem.make(c, P.rows, "max"))
    assert isinstance(out, Optimal)
    assert all(dot(a, out.point) <= b for a, b in P.rows)
    y = out.dual
    assert all(v >= 0 for v in y)
    assert sum(v * b for v, (_, b) in zip(y, P.rows)) == out.value
    for j in range(2):
        assert sum(v * a[j] for v, (a, _) in zip(y, P.rows)) == c[j]


@given(vectors(3), vectors(3))
def test_ray_certificate(c, d):
    # a cone {x : d.x <= 0} is unbounded for any c not a non-negative multiple of d
    rows = [(d, 0)]
    out = lp_solve(LPProblem.make(c, rows, "max"))
    if isinstance(out, Unbounded):
        assert dot(d, out.ray) <= 0 and dot(c, out.ray) > 0
    else:
        assert out.value == 0


def test_point_distance_examples():
    half = HPolyhedron.from_rows(2, [((-1, 0), -2)])
    assert point_distance((0, 0), half) == 2
    assert point_distance((F(1, 2), 0), UNIT_SQUARE) == 0
    assert point_distance((3, 0), UNIT_SQUARE) == 2
    assert point_distance((3, 3), UNIT_SQUARE, SUM) == 4


def test_point_distance_empty():
    empty = HPolyhedron.from_rows(1, [((1,), 0), ((-1,), -1)])
    with pytest.raises(EmptyPolyhedron):
        point_distance((0,), empty)


@given(polytopes(n=2), vectors(2))
def test_distance_zero_iff_member(P, p):
    assert (point_distance(p, P) == 0) == P.contains(p)


@given(polytopes(n=2), vectors(2), vectors(2), st.sampled_from(["sup", "sum"]))
def test_distance_triangle(P, p, r, kind):
    norm = Norm(kind)
    diff = tuple(a - b for a, b in zip(p, r))
    assert point_distance(p, P, norm) <= norm(diff) + point_distance(r, P, norm)


def test_support_examples():
    P = HPolyhedron.from_rows(2, [((0, 1), 5)])
    assert support_value(P, (0, 1)) == Finite(5, support_value(P, (0, 1)).point)
    s = support_value(P, (1, 0))
    assert isinstance(s, PlusInfinity) and s.ray[0] > 0
    tri = HPolyhedron.from_rows(2, [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])
    assert support_value(tri, (1, 1)).value == 1


@given(polytopes(n=3), vectors(3))
def test_support_homogeneous(P, u):
    a, b = support_value(P, u), support_value(P, tuple(2 * x for x in u))
    assert b.value == 2 * a.value


@given(vectors(3), vectors(3), small)
def test_norms_homogeneous_and_triangle(x, y, lam):
    for norm in (SUP, SUM):
        assert norm(tuple(lam * v for v in x)) == abs(lam) * norm(x)
        assert norm(tuple(a + b for a, b in zip(x, y))) <= norm(x) + norm(y)


@given(vectors(3), vectors(3))
def test_dual_norm_bounds_pairing(x, u):
    for norm in (SUP, SUM):
        assert abs(dot(u, x)) <= norm.dual()(u) * norm(x)


def test_norm_parsing():
    assert as_norm(None) is SUP
    assert as_norm("sum") == SUM
    with pytest.raises(InvalidInput):
        Norm("euclid")


@given(small, small)
def test_exact_arithmetic_roundtrip(a, b):
    assert (a + b) - b == a
    assert q(fmt(a)) == a


def test_canonical_format():
    assert fmt(F(4, -6)) == "-2/3"
    assert fmt(F(6, 3)) == "2"
    with pytest.raises(InvalidInput):
        q("1/0")
    with pytest.raises(InvalidInput):
        q(True)


@given(st.fractions(min_value=0, max_value=1000, max_denominator=50))
def test_sqrt_bounds_bracket(x):
    tol = F(1, 10**6)
    lo, hi = sqrt_bounds(x, tol)
    assert lo * lo <= x <= hi * hi and hi - lo <= tol
