import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from approxpoly.errors import (DimensionCapExceeded, DimensionMismatch, EmptyPolyhedron,
                               KernelNotInLineality)
from approxpoly.norms import SUP
from approxpoly.outcomes import Finite, PlusInfinity
from approxpoly.polyhedra import (HPolyhedron, QuotientMap, VPolyhedron, cone_contains, hrep_of,
                                  lineality_space, minkowski_sum_cone, point_distance, polar_cone,
                                  quotient_project, random_directions, recession_cone, reduce_hrep,
                                  reduce_vrep, same_support, support_value, vpoly_contains, vrep_of)
from approxpoly.rational import dot, is_zero

from conftest import polytopes, vectors

COMPASS = [(F(a), F(b)) for a in range(-2, 3) for b in range(-2, 3) if (a, b) != (0, 0)]


def H(dim, rows):
    return HPolyhedron.from_rows(dim, rows)


def test_recession_cone_of_box_example():
    P = H(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 2)])
    K = recession_cone(P)
    assert all(b == 0 for _, b in K.rows)
    assert vrep_of(K).rays == ((0, -1),)


def test_recession_cone_of_cone_is_itself():
    K = H(2, [((1, -1), 0), ((-1, -1), 0)])
    assert recession_cone(K) == K


def test_bounded_simplex_has_trivial_cone():
    S = H(2, [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])
    K = recession_cone(S)
    assert vrep_of(K).rays == ()
    assert lineality_space(S) == []


def test_recession_cone_of_empty_set():
    with pytest.raises(EmptyPolyhedron):
        recession_cone(H(1, [((1,), 0), ((-1,), -1)]))


def test_lineality_examples():
    assert lineality_space(H(2, [((0, 1), 0)])) == [(1, 0)]
    P = H(3, [((1, 1, 0), 1), ((-1, -1, 0), 0)])
    basis = lineality_space(P)
    assert len(basis) == 2
    for v in [(1, -1, 0), (0, 0, 1)]:
        # v lies in the span: appending it does not raise the rank
        from approxpoly.rational import rank

        assert rank(basis + [tuple(F(x) for x in v)], 3) == 2


def test_vrep_of_square_and_cone():
    sq = H(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
    V = vrep_of(sq)
    assert set(V.points) == {(a, b) for a in (1, -1) for b in (1, -1)} and V.rays == ()
    K = vrep_of(H(2, [((1, -1), 0), ((-1, -1), 0)]))
    assert K.points == ((0, 0),)
    assert {tuple(r) for r in K.rays} == {(1, 1), (-1, 1)}


def test_vrep_of_half_plane():
    P = H(2, [((0, 1), 0)])
    V = vrep_of(P)
    assert same_support(P, V, COMPASS)
    assert V.points == ((0, 0),)


def test_dimension_cap():
    n = 9
    box = H(n, [(tuple(int(i == j) for j in range(n)), 1) for i in range(n)])
    with pytest.raises(DimensionCapExceeded):
        vrep_of(box)


@given(polytopes(n=2))
def test_weyl_minkowski_round_trip_2d(P):
    V = vrep_of(P)
    dirs = random_directions(2, 30, random.Random(1))
    assert same_support(P, V, dirs)
    assert same_support(hrep_of(V), P, dirs)


@given(polytopes(n=3, rows=3))
def test_weyl_minkowski_round_trip_3d(P):
    V = vrep_of(P)
    assert same_support(P, V, random_directions(3, 20, random.Random(2)))


def test_round_trip_on_100_directions_with_rays():
    P = H(3, [((1, 0, 0), 1), ((0, -1, 0), 2), ((-1, -1, -1), 3), ((0, 0, 1), 4)])
    V = vrep_of(P)
    assert same_support(P, V, random_directions(3, 100, random.Random(3)))


@given(polytopes(n=2), vectors(2))
def test_recession_cone_ignores_offsets(P, shift):
    Q = HPolyhedron(2, tuple((a, b + dot(a, shift) + 1) for a, b in P.rows))
    assert recession_cone(P) == recession_cone(Q)


def test_polar_examples():
    K = VPolyhedron.cone([(1, 1), (-1, 1)])
    P = polar_cone(K)
    assert set(P.rows) == {((1, 1), 0), ((-1, 1), 0)}
    origin = VPolyhedron(2, ((F(0), F(0)),))
    assert polar_cone(origin).rows == ()
    K2 = VPolyhedron.cone([(2, 1), (1, 3)])
    back = hrep_of(polar_cone(hrep_of(polar_cone(K2))))
    assert same_support(back, K2, COMPASS)


def test_polar_rejects_non_cone():
    from approxpoly.errors import InvalidInput

    with pytest.raises(InvalidInput):
        polar_cone(VPolyhedron.make([(1, 0)]))


@st.composite
def cones(draw, n=2):
    gens = draw(st.lists(vectors(n), min_size=1, max_size=4))
    gens = [g for g in gens if not is_zero(g)] or [tuple(F(int(i == 0)) for i in range(n))]
    return VPolyhedron.cone(gens, n)


@given(cones(), vectors(2))
def test_polar_involution(K, u):
    twice = polar_cone(polar_cone(K))
    assert cone_contains(twice, u) == cone_contains(K, u)


@given(cones(3), vectors(3))
def test_polar_membership_matches_definition(K, u):
    inside = all(dot(u, g) <= 0 for g in K.rays)
    assert cone_contains(polar_cone(K), u) == inside


def test_minkowski_sum_cone_examples():
    Q = VPolyhedron.make([(0, 0)])
    K = VPolyhedron.cone([(1, 0)])
    S = minkowski_sum_cone(Q, K)
    assert S.points == ((0, 0),) and S.rays == ((1, 0),)
    assert minkowski_sum_cone(Q, VPolyhedron(2, ((F(0), F(0)),))) == Q
    seg = VPolyhedron.make([(0, 0), (0, 1)])
    S = minkowski_sum_cone(seg, K)
    assert isinstance(support_value(S, (1, 1)), PlusInfinity)
    assert support_value(S, (-1, 1)) == Finite(1, support_value(S, (-1, 1)).point)
    with pytest.raises(DimensionMismatch):
        minkowski_sum_cone(seg, VPolyhedron.cone([(1, 0, 0)]))


def test_quotient_examples():
    Z = QuotientMap([(1, 0)], 2)
    image = quotient_project(Z, H(2, [((0, -1), 0)]))
    assert image.dim == 1 and image.contains((5,)) and not image.contains((-1,))
    assert Z.quotient_norm((4,)) == 4
    assert Z.coords((3, 4)) == (4,)
    ident = QuotientMap([], 2)
    P = H(2, [((1, 1), 1)])
    assert quotient_project(ident, P) == P
    with pytest.raises(KernelNotInLineality):
        quotient_project(Z, H(2, [((1, 0), 1)]))


@given(vectors(3), vectors(3))
def test_projector_idempotent(k, x):
    if is_zero(k):
        return
    Z = QuotientMap([k], 3)
    px = Z.project(x)
    assert Z.project(px) == px
    assert is_zero(Z.project(k))
    assert Z.coords(Z.section(Z.coords(x))) == Z.coords(x)


@given(vectors(3), vectors(3))
def test_quotient_norm_is_coset_minimum(k, x):
    if is_zero(k):
        return
    Z = QuotientMap([k], 3)
    y = Z.coords(x)
    qn = Z.quotient_norm(y)
    assert qn <= SUP(x)
    # the section plus any kernel multiple never beats the minimum
    for t in (F(-2), F(-1, 2), F(0), F(1, 3), F(3)):
        assert qn <= SUP(tuple(a + t * b for a, b in zip(Z.section(y), k)))


def test_vpoly_membership_and_reduction():
    Q = VPolyhedron.make([(0, 0), (2, 0), (1, 0), (0, 2)], [(1, 1), (2, 2)])
    R = reduce_vrep(Q)
    assert len(R.points) == 3 and len(R.rays) == 1
    assert vpoly_contains(Q, (5, 4)) and not vpoly_contains(Q, (-1, 0))
    P = H(2, [((1, 0), 1), ((1, 0), 2), ((0, 1), 1)])
    assert len(reduce_hrep(P).rows) == 2


@given(polytopes(n=2))
def test_full_dimensional_interior_cone(P):
    # shrinking the offsets keeps a strictly feasible point and the same cone
    inner = HPolyhedron(2, tuple((a, b - F(1, 100)) for a, b in P.rows))
    try:
        point_distance((0, 0), inner)
    except EmptyPolyhedron:
        return
    assert recession_cone(inner) == recession_cone(P)
