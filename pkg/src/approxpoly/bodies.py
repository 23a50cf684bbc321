"""Closed convex bodies given by exact oracles.

Two planar epigraphs are built in, the convex parabola ``y >= x^2`` and
the convex hyperbola ``y >= sqrt(x^2 + 1)``, plus a wrapper that turns an
:class:`~approxpoly.polyhedra.HPolyhedron` into an oracle.  Membership and
the predicate ``dist(p, C) <= s`` are decided exactly for rational input;
distances themselves are bracketed by bisection on that predicate.
"""
import math
from fractions import Fraction

from .errors import DimensionMismatch
from .norms import as_norm
from .outcomes import Finite, PlusInfinity
from .polyhedra import HPolyhedron, point_distance, support_value
from .rational import ONE, ZERO, add, dot, q, sqrt_bounds, sub, vec

DEFAULT_TOL = Fraction(1, 10**9)


class ConvexBodyOracle:
    """Interface shared by all oracle bodies."""

    kind = "abstract"
    dim = 2

    def contains(self, p):
        raise NotImplementedError

    def dist_le(self, p, s, norm=None):
        """Exact decision of ``dist(p, C) <= s``."""
        raise NotImplementedError

    def recession_cone(self):
        raise NotImplementedError

    def support(self, u, tol=DEFAULT_TOL):
        raise NotImplementedError

    def distance_bounds(self, p, norm=None, tol=DEFAULT_TOL):
        """Rationals ``lo < dist(p, C) <= hi`` with ``hi - lo <= tol``.

        Returns ``(0, 0)`` for points of the body.
        """
        norm = as_norm(norm)
        p = vec(p)
        if self.contains(p):
            return ZERO, ZERO
        lo, hi = ZERO, ONE
        while not self.dist_le(p, hi, norm):
            lo, hi = hi, hi * 2
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if self.dist_le(p, mid, norm):
                hi = mid
            else:
                lo = mid
        return lo, hi

    def segment_point(self, a, b, tol=DEFAULT_TOL):
        """Some ``t`` in [0, 1] with ``a + t(b - a)`` in the body, or ``None``.

        The generic search walks dyadic grids down to resolution ``tol``;
        bodies with a closed-form profile override it with an exact answer.
        """
        a, b = vec(a), vec(b)
        d = sub(b, a)
        if self.contains(a):
            return ZERO
        if self.contains(b):
            return ONE
        k = 1
        while Fraction(1, 2**k) >= tol:
            for i in range(1, 2**k, 2):
                t = Fraction(i, 2**k)
                if self.contains(add(a, tuple(t * x for x in d))):
                    return t
            k += 1
        return None

    def describe(self):
        return {"kind": self.kind}


class EpigraphBody(ConvexBodyOracle):
    """``{(x, y) : y - oy >= f(x - ox)}`` for a convex profile ``f``."""

    def __init__(self, offset=(0, 0)):
        self.offset = vec(offset)

    # local coordinates -------------------------------------------------
    def _local(self, p):
        p = vec(p)
        if len(p) != 2:
            raise DimensionMismatch("planar body expects 2-D points")
        return p[0] - self.offset[0], p[1] - self.offset[1]

    def _global(self, p):
        return (p[0] + self.offset[0], p[1] + self.offset[1])

    def contains(self, p):
        x, y = self._local(p)
        return self._contains_local(x, y)

    def dist_le(self, p, s, norm=None):
        norm = as_norm(norm)
        s = q(s)
        if s < 0:
            return False
        x, y = self._local(p)
        if norm.kind == "sup":
            return self._min_profile(x - s, x + s, y + s)
        return self._sum_dist_le(x, y, s)

    def describe(self):
        d = {"kind": self.kind}
        if any(self.offset):
            d["offset"] = [str(v) for v in self.offset]
        return d

    # polygonization support ------------------------------------------
    def curve_point(self, param):
        return self._global(self._curve_local(param))

    def tangent_row(self, param):
        """Row ``(a, b)`` with the body inside ``a.x <= b``, tight at ``curve_point(param)``."""
        a, b = self._tangent_local(param)
        return a, b + dot(a, self.offset)

    def interior_point(self):
        return self._global((ZERO, self._interior_height()))

    def mirror_param(self, param):
        """Parameter of the mirror image of ``curve_point(param)``."""
        raise NotImplementedError

    def step_param(self, prev, step, sign):
        raise NotImplementedError

    def window_height(self, points):
        """Local height below which all tangent points seen from ``points`` lie."""
        raise NotImplementedError

    def sample_params(self, height, count):
        """About ``count`` parameters, sorted by tangent slope, whose curve
        points sit at local height at most ``height``; both extremes included."""
        raise NotImplementedError


class Parabola(EpigraphBody):
    kind = "parabola"

    def _contains_local(self, x, y):
        return y >= x * x

    def _min_profile(self, lo, hi, level):
        """Is ``min_{x in [lo, hi]} x^2 <= level``?"""
        m = ZERO if lo <= 0 <= hi else min(lo * lo, hi * hi)
        return m <= level

    def _sum_dist_le(self, x0, y0, s):
        # minimise g(x) = x^2 + |x - x0| over |x - x0| <= s
        lo, hi = x0 - s, x0 + s
        cands = [x0, min(max(max(x0, Fraction(-1, 2)), lo), hi), min(max(min(x0, Fraction(1, 2)), lo), hi)]
        g = min(c * c + abs(c - x0) for c in cands)
        return g <= y0 + s

    def recession_cone(self):
        return HPolyhedron.from_rows(2, [((1, 0), 0), ((-1, 0), 0), ((0, -1), 0)])

    def support(self, u, tol=DEFAULT_TOL):
        u1, u2 = vec(u)
        if u2 > 0:
            return PlusInfinity((ZERO, ONE))
        if u2 == 0:
            if u1 == 0:
                return Finite(ZERO, self.interior_point())
            return PlusInfinity(None)
        x = -u1 / (2 * u2)
        p = self._global((x, x * x))
        return Finite(u1 * p[0] + u2 * p[1], p)

    def segment_point(self, a, b, tol=DEFAULT_TOL):
        (xa, ya), (xb, yb) = self._local(a), self._local(b)
        dx, dy = xb - xa, yb - ya
        if dx == 0:
            cands = [ZERO, ONE]
        else:
            t = (dy - 2 * dx * xa) / (2 * dx * dx)
            cands = [min(max(t, ZERO), ONE)]
        for t in cands:
            if self._contains_local(xa + t * dx, ya + t * dy):
                return t
        return None

    def _curve_local(self, x):
        return (x, x * x)

    def sample_params(self, height, count):
        height = q(height)
        if height < 0:
            return []
        reach, _ = sqrt_bounds(height, Fraction(1, 2**20))
        reach = Fraction(math.floor(reach * 8), 8)  # small denominators keep the hulls cheap
        if reach == 0 or count < 2:
            return [ZERO]
        return [-reach + 2 * reach * Fraction(i, count - 1) for i in range(count)]

    def mirror_param(self, x):
        return -x

    def window_height(self, points):
        # tangent points seen from (x, y) sit at x +- sqrt(x^2 - y)
        top = ONE
        for x, y in (self._local(p) for p in points):
            _, r = sqrt_bounds(max(x * x - y, ZERO), Fraction(1, 2**10))
            top = max(top, (abs(x) + r + 1) ** 2)
        return top

    def step_param(self, prev, step, sign):
        """Parameter ``step`` further out than ``prev``, on the side given by ``sign``."""
        return sign * ((abs(prev) if prev is not None else ZERO) + step)

    def _tangent_local(self, x):
        # y >= 2 x0 x - x0^2
        return (2 * x, -ONE), x * x

    def _interior_height(self):
        return ONE


class Hyperbola(EpigraphBody):
    kind = "hyperbola"

    def _contains_local(self, x, y):
        return y >= 0 and y * y >= x * x + 1

    def _min_profile(self, lo, hi, level):
        m = ZERO if lo <= 0 <= hi else min(abs(lo), abs(hi))
        return level >= 0 and level * level >= m * m + 1

    def _sum_dist_le(self, x0, y0, s):
        # the profile is 1-Lipschitz, so the vertical move is optimal
        level = y0 + s
        return level >= 0 and level * level >= x0 * x0 + 1

    def recession_cone(self):
        return HPolyhedron.from_rows(2, [((1, -1), 0), ((-1, -1), 0)])

    def support(self, u, tol=DEFAULT_TOL):
        """Support value; the irrational case is rounded up to within ``tol``."""
        u1, u2 = vec(u)
        shift = u1 * self.offset[0] + u2 * self.offset[1]
        if u2 + u1 > 0:
            return PlusInfinity((ONE, ONE))
        if u2 - u1 > 0:
            return PlusInfinity((-ONE, ONE))
        if u1 == 0 and u2 == 0:
            return Finite(ZERO, self.curve_point(ONE))
        if u2 == -abs(u1):
            # approached along an asymptote, never attained
            return Finite(shift, None)
        lo, _ = sqrt_bounds(u2 * u2 - u1 * u1, tol)
        return Finite(shift - lo, None)

    def segment_point(self, a, b, tol=DEFAULT_TOL):
        (xa, ya), (xb, yb) = self._local(a), self._local(b)
        dx, dy = xb - xa, yb - ya
        cands = [ZERO, ONE]
        a2 = dy * dy - dx * dx
        if a2 != 0:
            a1 = 2 * (ya * dy - xa * dx)
            cands.append(min(max(-a1 / (2 * a2), ZERO), ONE))
        for t in cands:
            if self._contains_local(xa + t * dx, ya + t * dy):
                return t
        return None

    def _curve_local(self, t):
        t = q(t)
        return ((t - 1 / t) / 2, (t + 1 / t) / 2)

    def sample_params(self, height, count):
        # t and 1/t give mirror images; the curve height is (t + 1/t)/2
        height = q(height)
        if height < 1:
            return []
        top, _ = sqrt_bounds(height * height - 1, Fraction(1, 2**20))
        top = max(height + top - Fraction(1, 2**20), ONE)
        half = max(count // 2, 1)
        step = math.log(float(top)) / half
        ts = {ONE, top, 1 / top}
        for k in range(1, half):
            t = Fraction(math.exp(k * step)).limit_denominator(2**20)
            if 1 < t < top:
                ts.add(t)
                ts.add(1 / t)
        return sorted(ts)

    def mirror_param(self, t):
        return 1 / t

    def window_height(self, points):
        top = ONE
        for x, y in (self._local(p) for p in points):
            top = max(top, (2 * max(abs(x), abs(y)) + 2) ** 2)
        return top

    def step_param(self, prev, step, sign):
        mag = (max(prev, 1 / prev) if prev is not None else ONE) + step
        return mag if sign > 0 else 1 / mag

    def _tangent_local(self, t):
        x0, y0 = self._curve_local(t)
        # y0 y - x0 x >= 1
        return (x0, -y0), -ONE

    def _interior_height(self):
        return Fraction(2)


class PolyhedralBody(ConvexBodyOracle):
    """Oracle view of an H-polyhedron; every query is an exact LP."""

    kind = "hpoly"

    def __init__(self, P):
        self.P = P
        self.dim = P.dim

    def contains(self, p):
        return self.P.contains(p)

    def dist_le(self, p, s, norm=None):
        return point_distance(p, self.P, norm) <= q(s)

    def distance_bounds(self, p, norm=None, tol=DEFAULT_TOL):
        d = point_distance(p, self.P, norm)
        return d, d

    def recession_cone(self):
        return HPolyhedron(self.dim, tuple((a, ZERO) for a, _ in self.P.rows))

    def support(self, u, tol=DEFAULT_TOL):
        return support_value(self.P, u)

    def segment_point(self, a, b, tol=DEFAULT_TOL):
        t = segment_interval(self.P, a, b)
        return None if t is None else (t[0] + t[1]) / 2

    def describe(self):
        return {"kind": self.kind}


def segment_interval(P, a, b):
    """Exact ``[t0, t1]`` of parameters with ``a + t(b-a)`` in ``P``, or ``None``."""
    a, b = vec(a), vec(b)
    d = sub(b, a)
    lo, hi = ZERO, ONE
    for n, off in P.rows:
        slope = dot(n, d)
        rest = off - dot(n, a)
        if slope == 0:
            if rest < 0:
                return None
        elif slope > 0:
            hi = min(hi, rest / slope)
        else:
            lo = max(lo, rest / slope)
        if lo > hi:
            return None
    return lo, hi


BODIES = {"parabola": Parabola, "hyperbola": Hyperbola}


def make_body(kind, offset=(0, 0)):
    try:
        return BODIES[kind](offset)
    except KeyError:
        from .errors import UnsupportedBody

        raise UnsupportedBody(f"unknown body kind {kind!r}") from None


def as_oracle(C):
    if isinstance(C, HPolyhedron):
        return PolyhedralBody(C)
    return C
