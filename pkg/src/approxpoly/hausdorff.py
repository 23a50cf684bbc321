"""Hausdorff distances between polyhedra, ray level search, truncation radii."""

from .bodies import DEFAULT_TOL, ConvexBodyOracle
from .errors import (BudgetExceeded, ConeMismatch, DimensionMismatch, EmptyPolyhedron,
                     InvalidInput, NegativeOffset, PointNotInBody, RayInsideCone)
from .lp import LPProblem, Optimal, Unbounded, lp_solve
from .norms import as_norm
from .outcomes import Finite, Infinite, PlusInfinity
from .polyhedra import (HPolyhedron, VPolyhedron, cone_contains, hrep_of, point_distance,
                        recession_cone, require_nonempty, support_value, vrep_of)
from .rational import ONE, ZERO, add, dot, neg, primitive, q, scale, unit, vec, zeros

HausdorffOutcome = (Finite, Infinite)


def _as_h(P):
    return hrep_of(P) if isinstance(P, VPolyhedron) else P


def recession_escape(P, Q):
    """A ray of ``rec(P)`` outside ``rec(Q)``, or ``None`` if ``rec(P)`` is inside ``rec(Q)``."""
    Qh = _as_h(Q)
    if isinstance(P, VPolyhedron):
        for r in P.rays:
            if any(dot(a, r) > 0 for a, _ in Qh.rows):
                return primitive(r)
        return None
    cone = recession_cone(P)
    for a, _ in Qh.rows:
        s = support_value(cone, a)
        if isinstance(s, PlusInfinity):
            return primitive(s.ray)
    return None


def directed_distance(P, Q, norm=None):
    """``sup_{x in P} dist(x, Q)`` as ``Finite`` or ``Infinite(witness)``.

    Once ``rec(P)`` sits inside ``rec(Q)``, the distance to ``Q`` is convex
    and never grows along the rays of ``P``, so the supremum is attained at
    a point of the generator form of ``P``.
    """
    norm = as_norm(norm)
    if P.dim != Q.dim:
        raise DimensionMismatch("directed distance between sets of different dimension")
    require_nonempty(P)
    Qh = _as_h(Q)
    require_nonempty(Qh)
    ray = recession_escape(P, Qh)
    if ray is not None:
        return Infinite(ray)
    best, arg = ZERO, None
    for v in vrep_of(P).points:
        d = point_distance(v, Qh, norm)
        if arg is None or d > best:
            best, arg = d, v
    return Finite(best, arg)


def hausdorff_distance(P, Q, norm=None):
    """Symmetric Hausdorff distance; finite exactly when the recession cones agree."""
    first = directed_distance(P, Q, norm)
    if isinstance(first, Infinite):
        return first
    second = directed_distance(Q, P, norm)
    if isinstance(second, Infinite):
        return second
    return first if first.value >= second.value else second


def cones_equal(K1, K2):
    return recession_escape(K1, K2) is None and recession_escape(K2, K1) is None


# ---------------------------------------------------------------- ray search

def _ray_lp(c0, v, eps, C, norm):
    """Largest ``t`` with ``dist(c0 + t v, C) <= eps``, as an exact LP in ``(x, t[, s])``."""
    n = C.dim
    rows = [(a + (ZERO,), b) for a, b in C.rows]
    if norm.kind == "sup":
        extra = 0
        for i in range(n):
            e = unit(n, i)
            # c0_i + t v_i - x_i <= eps  and its negation
            rows.append((neg(e) + (v[i],), eps - c0[i]))
            rows.append((e + (-v[i],), eps + c0[i]))
    else:
        extra = n
        rows = [(a + (ZERO,) * n, b) for a, b in rows]
        for i in range(n):
            e, s = unit(n, i), neg(unit(n, i))
            rows.append((neg(e) + (v[i],) + s, -c0[i]))
            rows.append((e + (-v[i],) + s, c0[i]))
        rows.append((zeros(n) + (ZERO,) + (ONE,) * n, eps))
    width = n + 1 + extra
    rows.append((zeros(n) + (-ONE,) + zeros(extra), ZERO))
    obj = zeros(n) + (ONE,) + zeros(extra)
    assert all(len(a) == width for a, _ in rows)
    return lp_solve(LPProblem(obj, tuple(rows), "max"))


class RaySearch:
    """Result of :func:`ray_level_search_report`: the value and the probes made."""

    def __init__(self, t, probes):
        self.t = t
        self.probes = probes  # (t, dist <= eps) pairs in probe order


def ray_level_search_report(c0, v, eps, C, tol=DEFAULT_TOL, norm=None):
    norm = as_norm(norm)
    c0, v, eps, tol = vec(c0), vec(v), q(eps), q(tol)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    if isinstance(C, HPolyhedron):
        if not C.contains(c0):
            raise PointNotInBody("start point is not in the set")
        if cone_contains(recession_cone(C), v):
            raise RayInsideCone("direction lies in the recession cone", direction=v)
        out = _ray_lp(c0, v, eps, C, norm)
        if isinstance(out, Unbounded):
            raise RayInsideCone("direction lies in the recession cone", direction=v)
        assert isinstance(out, Optimal)
        t = out.value
        return RaySearch(t, [(t, True)])
    if not isinstance(C, ConvexBodyOracle):
        raise InvalidInput("expected an HPolyhedron or a ConvexBodyOracle")
    if not C.contains(c0):
        raise PointNotInBody("start point is not in the body")
    if cone_contains(C.recession_cone(), v):
        raise RayInsideCone("direction lies in the recession cone", direction=v)
    speed = norm(v)
    probes = []

    def ok(t):
        r = C.dist_le(add(c0, scale(t, v)), eps, norm)
        probes.append((t, r))
        return r

    lo, hi = ZERO, ONE
    budget = 400
    while ok(hi):
        lo, hi = hi, hi * 2
        budget -= 1
        if budget == 0:
            raise BudgetExceeded("ray search did not leave the eps-neighbourhood")
    while (hi - lo) * speed > tol or lo == 0:
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return RaySearch(lo, probes)


def ray_level_search(c0, v, eps, C, tol=DEFAULT_TOL, norm=None):
    """First ``t > 0`` where ``dist(c0 + t v, C)`` reaches ``eps``.

    Polyhedra give the exact crossing.  For oracle bodies the returned ``t``
    satisfies ``eps - tol < dist(c0 + t v, C) <= eps``.
    """
    return ray_level_search_report(c0, v, eps, C, tol, norm).t


# ---------------------------------------------------------------- truncation

def _ball_truncation(A, r, norm):
    return HPolyhedron(A.dim, A.rows + tuple(norm.ball_rows(A.dim, r)))


def truncated_with_cone(A, P, r, norm=None):
    """``(A intersected with the closed r-ball) + P`` in generator form."""
    norm = as_norm(norm)
    K = vrep_of(_ball_truncation(_as_h(A), r, norm))
    rays = P.rays if isinstance(P, VPolyhedron) else vrep_of(P).rays
    return VPolyhedron(A.dim, K.points, tuple(dict.fromkeys(tuple(rays))))


def truncation_radius(A, P, eps, norm=None, budget=60):
    """Radius ``r`` with ``dH((A cap rB) + P, A) <= eps``, and that set.

    The radius is the smallest one found by doubling followed by bisection
    down to a bracket of width ``eps/4``.
    """
    norm = as_norm(norm)
    eps = q(eps)
    A = _as_h(A)
    require_nonempty(A)
    if not cones_equal(recession_cone(A), P):
        raise ConeMismatch("the given cone is not the recession cone of A")
    cache = {}

    def attempt(r):
        if r not in cache:
            try:
                Ar = truncated_with_cone(A, P, r, norm)
            except EmptyPolyhedron:
                cache[r] = None
                return None
            d = hausdorff_distance(Ar, A, norm)
            cache[r] = Ar if isinstance(d, Finite) and d.value <= eps else None
        return cache[r]

    r0 = point_distance(zeros(A.dim), A, norm)
    if attempt(r0) is not None:
        return r0, cache[r0]
    lo, hi = r0, max(2 * r0, ONE)
    steps = 0
    while attempt(hi) is None:
        lo, hi = hi, hi * 2
        steps += 1
        if steps > budget:
            raise BudgetExceeded("truncation radius exceeded the doubling budget", budget=budget)
    while hi - lo > eps / 4:
        mid = (lo + hi) / 2
        if attempt(mid) is not None:
            hi = mid
        else:
            lo = mid
    return hi, cache[hi]


# ---------------------------------------------------------------- scaling bound

def offset_polyhedron(fs, a):
    fs = [vec(f) for f in fs]
    return HPolyhedron(len(fs[0]), tuple(zip(fs, vec(a))))


def scaling_bound_check(fs, a, norm=None):
    """Both sides of ``dH(P_a, P_0) <= dH(P_0, P_1) * max(a)``, computed exactly."""
    a = vec(a)
    if any(x < 0 for x in a):
        raise NegativeOffset("offsets must be non-negative")
    if len(a) != len(fs):
        raise DimensionMismatch("one offset per normal is required")
    n = len(a)
    P_a = offset_polyhedron(fs, a)
    P_0 = offset_polyhedron(fs, (ZERO,) * n)
    P_1 = offset_polyhedron(fs, (ONE,) * n)
    lhs = hausdorff_distance(P_a, P_0, norm)
    unit_gap = hausdorff_distance(P_0, P_1, norm)
    top = max(a, default=ZERO)
    rhs = unit_gap.value * top
    return lhs.value, rhs
