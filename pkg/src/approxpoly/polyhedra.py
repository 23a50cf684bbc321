"""Polyhedra in half-space and generator form.

``HPolyhedron`` is ``{x : a_i.x <= b_i}``; an empty row list is the whole
space.  ``VPolyhedron`` is ``conv(points) + cone(rays)`` and always has at
least one point.  A polyhedral cone is either an ``HPolyhedron`` whose
offsets are all zero or a ``VPolyhedron`` whose only point is the origin.

Conversions between the two forms use the double description method in
exact arithmetic.  Redundant rows and generators are allowed everywhere;
:func:`reduce_hrep` and :func:`reduce_vrep` strip them on request.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import (DimensionCapExceeded, DimensionMismatch, EmptyPolyhedron, InvalidInput,
                     KernelNotInLineality)
from .lp import Infeasible, LPProblem, Optimal, Unbounded, lp_solve
from .norms import as_norm
from .outcomes import Finite, PlusInfinity
from .rational import (ONE, ZERO, add, dot, is_zero, neg, nullspace, primitive, q,
                       rref, scale, sub, unit, vec, zeros)

DEFAULT_DIM_CAP = 8


@dataclass(frozen=True)
class HPolyhedron:
    dim: int
    rows: tuple = ()

    def __post_init__(self):
        for a, _ in self.rows:
            if len(a) != self.dim:
                raise DimensionMismatch(f"normal of length {len(a)} in dimension {self.dim}")

    @classmethod
    def from_rows(cls, dim, rows):
        return cls(dim, tuple((vec(a), q(b)) for a, b in rows))

    @classmethod
    def from_arrays(cls, A, b, dim=None):
        A = [vec(r) for r in A]
        if dim is None:
            if not A:
                raise DimensionMismatch("dimension required for an empty row list")
            dim = len(A[0])
        return cls(dim, tuple(zip(A, vec(b))))

    @classmethod
    def whole_space(cls, dim):
        return cls(dim, ())

    @property
    def A(self):
        return [a for a, _ in self.rows]

    @property
    def b(self):
        return [b for _, b in self.rows]

    @property
    def is_cone(self):
        return all(b == 0 for _, b in self.rows)

    def contains(self, x):
        x = vec(x)
        return all(dot(a, x) <= b for a, b in self.rows)

    def intersect(self, other):
        if other.dim != self.dim:
            raise DimensionMismatch("dimension mismatch in intersection")
        return HPolyhedron(self.dim, self.rows + other.rows)

    def with_rows(self, rows):
        return HPolyhedron(self.dim, self.rows + tuple((vec(a), q(b)) for a, b in rows))

    def translate(self, v):
        v = vec(v)
        return HPolyhedron(self.dim, tuple((a, b + dot(a, v)) for a, b in self.rows))

    def scaled_offsets(self, t):
        return HPolyhedron(self.dim, tuple((a, q(t) * b) for a, b in self.rows))


@dataclass(frozen=True)
class VPolyhedron:
    dim: int
    points: tuple
    rays: tuple = ()

    def __post_init__(self):
        if not self.points:
            raise EmptyPolyhedron("a generator-form polyhedron needs at least one point")
        for v in self.points + self.rays:
            if len(v) != self.dim:
                raise DimensionMismatch(f"generator of length {len(v)} in dimension {self.dim}")

    @classmethod
    def make(cls, points, rays=(), dim=None):
        points = tuple(vec(p) for p in points)
        rays = tuple(vec(r) for r in rays)
        if dim is None:
            dim = len(points[0]) if points else len(rays[0])
        return cls(dim, points, rays)

    @classmethod
    def cone(cls, generators, dim=None):
        generators = tuple(vec(g) for g in generators)
        if dim is None:
            dim = len(generators[0])
        return cls(dim, (zeros(dim),), generators)

    @property
    def is_cone(self):
        return all(is_zero(p) for p in self.points)

    @property
    def is_bounded(self):
        return all(is_zero(r) for r in self.rays)


# ---------------------------------------------------------------- basic LPs

def feasible_point(P):
    out = lp_solve(LPProblem(zeros(P.dim), P.rows, "max")) if P.rows else None
    if out is None:
        return zeros(P.dim)
    if isinstance(out, Infeasible):
        return None
    return out.point


def require_nonempty(P):
    if isinstance(P, VPolyhedron):
        return P.points[0]
    x = feasible_point(P)
    if x is None:
        raise EmptyPolyhedron("polyhedron has no feasible point")
    return x


def is_empty(P):
    return isinstance(P, HPolyhedron) and feasible_point(P) is None


def support_value(P, u):
    """``sup {u.x : x in P}`` as ``Finite(value, point)`` or ``PlusInfinity(ray)``."""
    u = vec(u)
    if len(u) != P.dim:
        raise DimensionMismatch("direction has wrong length")
    if isinstance(P, VPolyhedron):
        for r in P.rays:
            if dot(u, r) > 0:
                return PlusInfinity(r)
        best = max(P.points, key=lambda v: dot(u, v))
        return Finite(dot(u, best), best)
    if not P.rows:
        if is_zero(u):
            return Finite(ZERO, zeros(P.dim))
        return PlusInfinity(u)
    out = lp_solve(LPProblem(u, P.rows, "max"))
    if isinstance(out, Infeasible):
        raise EmptyPolyhedron("support value of an empty polyhedron")
    if isinstance(out, Unbounded):
        return PlusInfinity(out.ray)
    return Finite(out.value, out.point)


def _distance_lp(p, P, norm):
    n = P.dim
    if norm.kind == "sup":
        nv = n + 1
        rows = [(a + (ZERO,), b) for a, b in P.rows]
        for i in range(n):
            e = unit(n, i)
            rows.append((e + (-ONE,), p[i]))
            rows.append((neg(e) + (-ONE,), -p[i]))
        obj = zeros(n) + (ONE,)
    else:
        nv = 2 * n
        rows = [(a + zeros(n), b) for a, b in P.rows]
        for i in range(n):
            e, s = unit(n, i), neg(unit(n, i))
            rows.append((e + s, p[i]))
            rows.append((neg(e) + s, -p[i]))
        obj = zeros(n) + (ONE,) * n
    assert len(obj) == nv
    return lp_solve(LPProblem(obj, tuple(rows), "min"))


def nearest_point(p, P, norm=None):
    """``(distance, x)`` with ``x`` in ``P`` attaining the exact distance."""
    norm = as_norm(norm)
    p = vec(p)
    if len(p) != P.dim:
        raise DimensionMismatch("point has wrong length")
    if isinstance(P, VPolyhedron):
        P = hrep_of(P)
    if P.contains(p):
        return ZERO, p
    out = _distance_lp(p, P, norm)
    if isinstance(out, Infeasible):
        raise EmptyPolyhedron("distance to an empty polyhedron")
    assert isinstance(out, Optimal)
    return out.value, out.point[:P.dim]


def point_distance(p, P, norm=None):
    """Exact ``min {||p - x|| : x in P}`` for the sup or sum norm."""
    return nearest_point(p, P, norm)[0]


# ---------------------------------------------------------------- cones

def recession_cone(P):
    """Recession cone: same normals, offsets zeroed (generators: rays only)."""
    if isinstance(P, VPolyhedron):
        return VPolyhedron.cone(P.rays, P.dim) if P.rays else VPolyhedron(P.dim, (zeros(P.dim),))
    require_nonempty(P)
    return HPolyhedron(P.dim, tuple((a, ZERO) for a, _ in P.rows))


def lineality_space(P):
    """Basis of the largest linear subspace contained in the recession cone."""
    if isinstance(P, VPolyhedron):
        P = hrep_of(P)
    require_nonempty(P)
    return nullspace([a for a, _ in P.rows], P.dim)


def cone_contains(K, v):
    """Exact membership of a vector in a polyhedral cone (either form)."""
    v = vec(v)
    if isinstance(K, HPolyhedron):
        return all(dot(a, v) <= 0 for a, _ in K.rows)
    return vpoly_contains(K, v)


def vpoly_contains(Q, x):
    """Exact membership in ``conv(points) + cone(rays)`` via an LP."""
    x = vec(x)
    k, r, n = len(Q.points), len(Q.rays), Q.dim
    nv = k + r
    rows = []
    for i in range(n):
        coeffs = tuple(p[i] for p in Q.points) + tuple(g[i] for g in Q.rays)
        rows.append((coeffs, x[i]))
        rows.append((neg(coeffs), -x[i]))
    ones = (ONE,) * k + (ZERO,) * r
    rows.append((ones, ONE))
    rows.append((neg(ones), -ONE))
    for j in range(nv):
        rows.append((neg(unit(nv, j)), ZERO))
    return not isinstance(lp_solve(LPProblem(zeros(nv), tuple(rows), "max")), Infeasible)


def contains(P, x):
    if isinstance(P, HPolyhedron):
        return P.contains(x)
    return vpoly_contains(P, x)


# ---------------------------------------------------------------- double description

def _popcount(x):
    return bin(x).count("1")


def cone_generators(constraints, d):
    """Extreme rays and lineality basis of ``{y : g.y <= 0 for g in constraints}``.

    Double description with lineality handled by pivoting: a constraint
    that is non-zero on some line cuts that line to a ray.  Adjacency of
    two rays is decided by the combinatorial test on their sets of tight
    constraints, which is exact because the ray list stays minimal.
    """
    lines = [unit(d, i) for i in range(d)]
    rays = []  # [vector, tight-mask]
    seen = 0
    for idx, g in enumerate(constraints):
        if is_zero(g):
            continue
        bit = 1 << idx
        lvals = [dot(g, l) for l in lines]
        k = next((i for i, v in enumerate(lvals) if v), None)
        if k is not None:
            l0, v0 = lines[k], lvals[k]
            if v0 > 0:
                l0, v0 = neg(l0), -v0
            new_lines = []
            for i, l in enumerate(lines):
                if i == k:
                    continue
                if lvals[i]:
                    l = sub(l, scale(lvals[i] / v0, l0))
                new_lines.append(primitive(l))
            new_rays = []
            for r, mask in rays:
                gv = dot(g, r)
                if gv:
                    r = primitive(sub(r, scale(gv / v0, l0)))
                new_rays.append([r, mask | bit])
            new_rays.append([primitive(l0), seen])
            lines, rays = new_lines, new_rays
            seen |= bit
            continue
        pos, zero, negs = [], [], []
        for item in rays:
            gv = dot(g, item[0])
            if gv > 0:
                pos.append((item, gv))
            elif gv < 0:
                negs.append((item, gv))
            else:
                zero.append(item)
        new_rays = [[r, m | bit] for r, m in zero] + [item for item, _ in negs]
        need = d - len(lines) - 2
        for (p, pm), pv in pos:
            for (nr, nm), nv in negs:
                common = pm & nm
                if _popcount(common) < need:
                    continue
                adjacent = True
                for other, om in rays:
                    if other is p or other is nr:
                        continue
                    if om & common == common:
                        adjacent = False
                        break
                if adjacent:
                    r = primitive(sub(scale(pv, nr), scale(nv, p)))
                    new_rays.append([r, common | bit])
        rays = new_rays
        seen |= bit
    return [r for r, _ in rays], lines


def _check_cap(dim, cap):
    if dim > cap:
        raise DimensionCapExceeded(f"dimension {dim} exceeds the conversion cap {cap}")


def _dedupe(vectors):
    out, seen = [], set()
    for v in vectors:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return tuple(out)


def vrep_of(P, cap=DEFAULT_DIM_CAP):
    """Generator form of an H-polyhedron."""
    if isinstance(P, VPolyhedron):
        return P
    n = P.dim
    _check_cap(n, cap)
    cons = [a + (-b,) for a, b in P.rows]
    cons.append(zeros(n) + (-ONE,))
    rays, lines = cone_generators(cons, n + 1)
    points, out_rays = [], []
    for r in rays:
        if r[-1] > 0:
            points.append(tuple(x / r[-1] for x in r[:-1]))
        elif not is_zero(r[:-1]):
            out_rays.append(primitive(r[:-1]))
    for l in lines:
        out_rays.append(primitive(l[:-1]))
        out_rays.append(primitive(neg(l[:-1])))
    if not points:
        raise EmptyPolyhedron("polyhedron has no feasible point")
    return VPolyhedron(n, _dedupe(points), _dedupe(out_rays))


def hrep_of(Q, cap=DEFAULT_DIM_CAP):
    """Half-space form of a generator-form polyhedron."""
    if isinstance(Q, HPolyhedron):
        return Q
    n = Q.dim
    _check_cap(n, cap)
    gens = [p + (ONE,) for p in Q.points] + [r + (ZERO,) for r in Q.rays]
    rays, lines = cone_generators(gens, n + 1)
    rows = []
    for y in rays + lines + [neg(l) for l in lines]:
        a, c = y[:-1], y[-1]
        if is_zero(a):
            continue
        rows.append((a, -c))
    return HPolyhedron(n, _dedupe(rows))


# ---------------------------------------------------------------- polar, sums

def polar_cone(K):
    """``{u : u.x <= 0 for all x in K}``; V-form in gives H-form out and vice versa."""
    if isinstance(K, VPolyhedron):
        if not K.is_cone:
            raise InvalidInput("polar_cone expects a cone")
        return HPolyhedron(K.dim, tuple((r, ZERO) for r in K.rays if not is_zero(r)))
    if not K.is_cone:
        raise InvalidInput("polar_cone expects a cone")
    return VPolyhedron.cone([a for a, _ in K.rows if not is_zero(a)], K.dim) if any(
        not is_zero(a) for a, _ in K.rows) else VPolyhedron(K.dim, (zeros(K.dim),))


def cone_rays(K):
    """Generators of a cone given in either form."""
    if isinstance(K, VPolyhedron):
        return K.rays
    return vrep_of(K, cap=max(K.dim, DEFAULT_DIM_CAP)).rays


def minkowski_sum_cone(Q, K):
    if Q.dim != K.dim:
        raise DimensionMismatch("dimension mismatch in Minkowski sum")
    return VPolyhedron(Q.dim, Q.points, _dedupe(Q.rays + tuple(cone_rays(K))))


def minkowski_sum(P, Q):
    """Sum of two generator-form polyhedra."""
    if P.dim != Q.dim:
        raise DimensionMismatch("dimension mismatch in Minkowski sum")
    pts = _dedupe(add(a, b) for a in P.points for b in Q.points)
    return VPolyhedron(P.dim, pts, _dedupe(P.rays + Q.rays))


# ---------------------------------------------------------------- normalization

def reduce_hrep(P):
    """Drop rows implied by the remaining ones."""
    rows = list(P.rows)
    i = 0
    while i < len(rows):
        a, b = rows[i]
        rest = rows[:i] + rows[i + 1:]
        if is_zero(a):
            redundant = b >= 0
        else:
            s = support_value(HPolyhedron(P.dim, tuple(rest)), a) if rest else PlusInfinity()
            redundant = isinstance(s, Finite) and s.value <= b
        if redundant:
            rows.pop(i)
        else:
            i += 1
    return HPolyhedron(P.dim, tuple(rows))


def reduce_vrep(Q):
    """Drop generators implied by the remaining ones."""
    points, rays = list(Q.points), list(Q.rays)
    i = 0
    while i < len(rays):
        rest = VPolyhedron.cone(rays[:i] + rays[i + 1:], Q.dim) if len(rays) > 1 else None
        if is_zero(rays[i]) or (rest is not None and vpoly_contains(rest, rays[i])):
            rays.pop(i)
        else:
            i += 1
    i = 0
    while i < len(points) and len(points) > 1:
        rest = VPolyhedron(Q.dim, tuple(points[:i] + points[i + 1:]), tuple(rays))
        if vpoly_contains(rest, points[i]):
            points.pop(i)
        else:
            i += 1
    return VPolyhedron(Q.dim, tuple(points), tuple(rays))


# ---------------------------------------------------------------- quotients

class QuotientMap:
    """Quotient by ``Z = span(kernel_basis)`` in rational coordinates.

    The complement is spanned by the coordinate vectors that are not pivot
    columns of the reduced kernel basis, so ``coords`` maps ``R^n`` onto
    ``R^(n-k)`` and ``section`` embeds it back as a right inverse.
    """

    def __init__(self, kernel_basis, dim):
        kernel = [vec(v) for v in kernel_basis if not is_zero(vec(v))]
        for v in kernel:
            if len(v) != dim:
                raise DimensionMismatch("kernel vector has wrong length")
        self.dim = dim
        red, pivots = rref(kernel, dim) if kernel else ([], [])
        self.kernel_basis = tuple(red)
        self.pivots = tuple(pivots)
        self.free = tuple(c for c in range(dim) if c not in pivots)

    @property
    def quotient_dim(self):
        return len(self.free)

    def project(self, x):
        """The projector onto the complement, applied to ``x``."""
        x = list(vec(x))
        for row, pc in zip(self.kernel_basis, self.pivots):
            f = x[pc]
            if f:
                x = [a - f * b for a, b in zip(x, row)]
        return tuple(x)

    def coords(self, x):
        w = self.project(x)
        return tuple(w[c] for c in self.free)

    def linear_coords(self, v):
        return self.coords(v)

    def section(self, y):
        x = [ZERO] * self.dim
        for c, val in zip(self.free, vec(y)):
            x[c] = val
        return tuple(x)

    @property
    def projector(self):
        cols = [self.project(unit(self.dim, j)) for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def kernel_hpoly(self):
        """``Z`` itself as an H-polyhedron (pairs of opposite rows)."""
        rows = []
        for w in nullspace(list(self.kernel_basis), self.dim) if self.kernel_basis else [
                unit(self.dim, i) for i in range(self.dim)]:
            rows.append((w, ZERO))
            rows.append((neg(w), ZERO))
        return HPolyhedron(self.dim, tuple(rows))

    def quotient_norm(self, y, norm=None):
        """``min ||x||`` over the coset ``section(y) + Z``."""
        return point_distance(self.section(y), self.kernel_hpoly(), norm)

    def preimage(self, P):
        """``q^{-1}(P)`` for an H-polyhedron ``P`` in quotient coordinates."""
        rows = []
        for a, b in P.rows:
            rows.append((self.covector(a), b))
        return HPolyhedron(self.dim, tuple(rows))

    def covector(self, a):
        """Pull back a functional on quotient coordinates: ``a . coords(x)``."""
        out = [ZERO] * self.dim
        for c, val in zip(self.free, a):
            out[c] += val
        for row, pc in zip(self.kernel_basis, self.pivots):
            f = sum((val * row[c] for c, val in zip(self.free, a)), ZERO)
            out[pc] -= f
        return tuple(out)


def quotient_project(qmap, P):
    """Image of ``P`` under the quotient map, in complement coordinates."""
    if P.dim != qmap.dim:
        raise DimensionMismatch("polyhedron and quotient map disagree on dimension")
    if isinstance(P, VPolyhedron):
        pts = _dedupe(qmap.coords(p) for p in P.points)
        rays = _dedupe(r for r in (qmap.coords(g) for g in P.rays) if not is_zero(r))
        return VPolyhedron(qmap.quotient_dim, pts, rays)
    for z in qmap.kernel_basis:
        if any(dot(a, z) != 0 for a, _ in P.rows):
            raise KernelNotInLineality("kernel is not contained in the lineality space")
    rows = tuple((tuple(a[c] for c in qmap.free), b) for a, b in P.rows)
    return HPolyhedron(qmap.quotient_dim, rows)


def same_support(P, Q, directions):
    """True if ``P`` and ``Q`` have identical support values on ``directions``."""
    for u in directions:
        s, t = support_value(P, u), support_value(Q, u)
        if isinstance(s, Finite) != isinstance(t, Finite):
            return False
        if isinstance(s, Finite) and s.value != t.value:
            return False
    return True


def random_directions(n, count, rng, spread=5):
    out = []
    while len(out) < count:
        u = tuple(Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(n))
        if not is_zero(u):
            out.append(u)
    return out
