"""Hidden sets: verification and the constructions that produce them.

A finite set ``A`` outside a convex set ``C`` is hidden behind ``C`` when
every segment between two of its points meets ``C``.  Every constructor
here returns a :class:`HidingWitness` whose segment certificates can be
re-checked with exact arithmetic.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .bodies import DEFAULT_TOL, PolyhedralBody, segment_interval
from .errors import (BadConeShape, BudgetExceeded, DegenerateDecomposition, DimensionExhausted,
                     GeometryError, InvalidInput, KernelNotInLineality, LiftInfeasible, NotHidden,
                     PointInsideBody, PreconditionUnsatisfied, SegmentMissesBody, UnboundedBody)
from .hausdorff import ray_level_search
from .lp import Infeasible, LPProblem, Optimal, lp_solve
from .norms import as_norm
from .outcomes import Finite, PlusInfinity
from .planar import PlanarRegion
from .polyhedra import (HPolyhedron, VPolyhedron, hrep_of, lineality_space, minkowski_sum,
                        point_distance, quotient_project, support_value,
                        vrep_of)
from .rational import ONE, ZERO, add, dot, is_zero, lincomb, neg, q, scale, sub, unit, vec, zeros


@dataclass
class HidingWitness:
    points: list
    body: object
    bounds: list  # lower bounds on dist(point, body)
    certificates: dict = field(default_factory=dict)  # (i, j) -> point of [a_i, a_j] in the body
    notes: dict = field(default_factory=dict)

    def pairs(self):
        return sorted(self.certificates)


@dataclass(frozen=True)
class BiorthogonalPair:
    x: tuple
    xstar: tuple
    norm: object

    def check(self):
        return dot(self.xstar, self.x) == 1


def _contains(C, p):
    return C.contains(p)


def _distance_lower_bound(C, p, norm, tol):
    if isinstance(C, HPolyhedron):
        return point_distance(p, C, norm)
    return C.distance_bounds(p, norm, tol)[0]


def segment_certificate(C, a, b, tol=DEFAULT_TOL):
    """A point of ``[a, b]`` inside ``C``, or ``None``."""
    if isinstance(C, HPolyhedron):
        span = segment_interval(C, a, b)
        if span is None:
            return None
        t = (span[0] + span[1]) / 2
    else:
        t = C.segment_point(a, b, tol)
        if t is None:
            return None
    return add(a, scale(t, sub(b, a)))


def on_segment(p, a, b):
    """True if ``p`` is a convex combination of ``a`` and ``b`` (exact)."""
    d = sub(b, a)
    w = sub(p, a)
    if is_zero(d):
        return is_zero(w)
    k = next(i for i, x in enumerate(d) if x)
    t = w[k] / d[k]
    return 0 <= t <= 1 and all(w[i] == t * d[i] for i in range(len(d)))


def check_witness(W):
    """Re-check every claim in a witness; raises on the first failure."""
    C = W.body
    for i, a in enumerate(W.points):
        if _contains(C, a):
            raise PointInsideBody(i)
    for (i, j), p in W.certificates.items():
        if not on_segment(p, W.points[i], W.points[j]) or not _contains(C, p):
            raise SegmentMissesBody(i, j, "certificate does not check out")
    return True


def verify_hidden_set(A, C, tol=DEFAULT_TOL, norm=None, with_bounds=True):
    """Certify that ``A`` is hidden behind ``C``.

    Every point must lie outside ``C`` and every segment between two of
    them must contain a point of ``C``.  Polyhedra are handled with exact
    interval arithmetic.  Oracle bodies use their own segment search.
    """
    norm = as_norm(norm)
    A = [vec(a) for a in A]
    if len(set(A)) != len(A):
        raise InvalidInput("hidden-set points must be pairwise distinct")
    for i, a in enumerate(A):
        if _contains(C, a):
            raise PointInsideBody(i)
    certs = {}
    for i, j in combinations(range(len(A)), 2):
        p = segment_certificate(C, A[i], A[j], tol)
        if p is None:
            raise SegmentMissesBody(i, j)
        certs[(i, j)] = p
    bounds = [_distance_lower_bound(C, a, norm, tol) for a in A] if with_bounds else []
    W = HidingWitness(A, C, bounds, certs)
    check_witness(W)
    return W


# ---------------------------------------------------------------- hull transfer

def hull_hiding_transfer(a, b, x, y, c, c_x, c_y, t_x, t_y, t):
    """Coefficients showing ``[x, y]`` meets ``conv{c, c_x, c_y}``.

    Inputs satisfy ``x = t_x a + (1-t_x) c_x``, ``y = t_y b + (1-t_y) c_y`` and
    ``c = t a + (1-t) b``.  Returns ``(u, alpha, alpha_x, alpha_y)`` with
    ``u x + (1-u) y = alpha c + alpha_x c_x + alpha_y c_y``.
    """
    a, b, x, y, c, c_x, c_y = (vec(v) for v in (a, b, x, y, c, c_x, c_y))
    t_x, t_y, t = q(t_x), q(t_y), q(t)
    if not (0 < t_x <= 1 and 0 < t_y <= 1 and 0 <= t <= 1):
        raise DegenerateDecomposition("coefficients out of range")
    if x != add(scale(t_x, a), scale(1 - t_x, c_x)):
        raise DegenerateDecomposition("x is not t_x a + (1 - t_x) c_x")
    if y != add(scale(t_y, b), scale(1 - t_y, c_y)):
        raise DegenerateDecomposition("y is not t_y b + (1 - t_y) c_y")
    if c != add(scale(t, a), scale(1 - t, b)):
        raise DegenerateDecomposition("c is not t a + (1 - t) b")
    u = t * t_y / (t * t_y + (1 - t) * t_x)
    alpha = u * t_x + (1 - u) * t_y
    alpha_x = u * (1 - t_x)
    alpha_y = (1 - u) * (1 - t_y)
    left = add(scale(u, x), scale(1 - u, y))
    right = lincomb((alpha, alpha_x, alpha_y), (c, c_x, c_y))
    assert alpha + alpha_x + alpha_y == 1 and left == right
    return u, alpha, alpha_x, alpha_y


# ---------------------------------------------------------------- inflation

def _as_cone_h(cone):
    K = hrep_of(cone) if isinstance(cone, VPolyhedron) else cone
    if not K.is_cone:
        raise InvalidInput("expected a polyhedral cone")
    return K


def inflate_hidden_set(A, C, cone, tol=DEFAULT_TOL, norm=None):
    """Push a set hidden behind ``cone`` outwards until the n-th point is farther than n from ``C``."""
    norm = as_norm(norm)
    K = _as_cone_h(cone)
    try:
        base = verify_hidden_set(A, K, tol, norm, with_bounds=False)
    except (PointInsideBody, SegmentMissesBody) as exc:
        raise NotHidden(f"input set is not hidden behind the cone: {exc}") from exc
    origin = zeros(K.dim)
    if not _contains(C, origin):
        raise PreconditionUnsatisfied("the origin must lie in C")
    ts, pts, bounds = [], [], []
    for n, a in enumerate(base.points):
        t = ray_level_search(origin, a, n + 1, C, tol, norm)
        p = scale(t, a)
        ts.append(t)
        pts.append(p)
        bounds.append(_distance_lower_bound(C, p, norm, tol))
    certs, us = {}, {}
    for (n, m), cp in base.certificates.items():
        a_n, a_m = base.points[n], base.points[m]
        # cp = tau a_n + (1 - tau) a_m
        d = sub(a_n, a_m)
        k = next(i for i, v in enumerate(d) if v)
        tau = (cp[k] - a_m[k]) / d[k]
        u = tau * ts[m] / (tau * ts[m] + (1 - tau) * ts[n])
        p = add(scale(u, pts[n]), scale(1 - u, pts[m]))
        # the point is a positive multiple of cp, hence in the cone and in C
        factor = ts[n] * ts[m] / (tau * ts[m] + (1 - tau) * ts[n])
        assert p == scale(factor, cp) and K.contains(p)
        if not _contains(C, p):
            raise PreconditionUnsatisfied("the cone is not contained in C")
        certs[(n, m)] = p
        us[(n, m)] = u
    W = HidingWitness(pts, C, bounds, certs, {"scales": ts, "u": us})
    check_witness(W)
    return W


# ---------------------------------------------------------------- lifting

def _lift_into(C, qmap, y):
    """Some ``x`` in ``C`` with ``qmap.coords(x) == y``."""
    rows = list(C.rows)
    for i in range(qmap.quotient_dim):
        e = qmap.covector(unit(qmap.quotient_dim, i))
        rows.append((e, y[i]))
        rows.append((neg(e), -y[i]))
    out = lp_solve(LPProblem(zeros(C.dim), tuple(rows), "max"))
    if isinstance(out, Infeasible):
        raise LiftInfeasible("no point of C over the requested quotient point")
    return out.point


def lift_hidden_set(qmap, A_tilde, C, tol=DEFAULT_TOL):
    """Lift a set hidden behind the quotient image of ``C`` to one hidden behind ``C``."""
    for z in qmap.kernel_basis:
        if any(dot(a, z) != 0 for a, _ in C.rows):
            raise KernelNotInLineality("quotient kernel is not inside the lineality space")
    image = quotient_project(qmap, C)
    A_tilde = [vec(a) for a in A_tilde]
    if len(A_tilde) > 1:
        try:
            base = verify_hidden_set(A_tilde, image, tol, with_bounds=False)
        except (PointInsideBody, SegmentMissesBody) as exc:
            raise NotHidden(f"quotient set is not hidden: {exc}") from exc
        certs = base.certificates
    else:
        certs = {}
    coord_rows = [qmap.covector(unit(qmap.quotient_dim, i)) for i in range(qmap.quotient_dim)]
    lifted = []
    for n, an in enumerate(A_tilde):
        fibres = []
        for i in range(n):
            ct = certs[(i, n)]
            d = sub(A_tilde[n], A_tilde[i])
            k = next(j for j, v in enumerate(d) if v)
            s = (ct[k] - A_tilde[i][k]) / d[k]  # ct = (1 - s) a_i + s a_n
            u = 1 - s
            c_i = _lift_into(C, qmap, ct)
            fibres.append(scale(1 / (1 - u), sub(c_i, scale(u, lifted[i]))))
        if not fibres:
            lifted.append(qmap.section(an))
            continue
        # a_n - a_i' must lie in the recession cone of C and in the kernel
        rows = []
        for f in fibres:
            for a, _ in C.rows:
                rows.append((a, dot(a, f)))
            for e in coord_rows:
                rows.append((e, dot(e, f)))
                rows.append((neg(e), -dot(e, f)))
        out = lp_solve(LPProblem(zeros(C.dim), tuple(rows), "max"))
        if isinstance(out, Infeasible):
            raise LiftInfeasible(f"fibre intersection empty at index {n}")
        lifted.append(out.point)
    for a, at in zip(lifted, A_tilde):
        assert qmap.coords(a) == at
    return lifted


# ---------------------------------------------------------------- planar induction

def _frame_candidates(body):
    cone = body.recession_cone()
    if lineality_space(cone):
        raise BadConeShape("recession cone contains a line")
    rays = vrep_of(cone).rays
    if not rays:
        raise BadConeShape("recession cone is trivial")
    if len(rays) == 1:
        g = rays[0]
        p = (-g[1], g[0])
        return [(g, p), (g, neg(p))]
    g1, g2 = rays[0], rays[1]
    return [(g1, g2), (g2, g1)]


def _coords(e1, e2, z):
    det = e1[0] * e2[1] - e2[0] * e1[1]
    return ((z[0] * e2[1] - z[1] * e2[0]) / det, (e1[0] * z[1] - e1[1] * z[0]) / det)


def hiding_frame(body):
    """``(origin, e1, e2)`` with ``e1`` recessive and ``e2`` unbounded below on the body.

    Raises :class:`PreconditionUnsatisfied` when no such frame exists, which
    is the case exactly when the body stays at finite distance from its
    recession cone.
    """
    if getattr(body, "dim", 2) != 2:
        raise BadConeShape("planar bodies only")
    for e1, e2 in _frame_candidates(body):
        det = e1[0] * e2[1] - e2[0] * e1[1]
        e2_dual = (-e1[1] / det, e1[0] / det)
        if isinstance(body.support(neg(e2_dual)), PlusInfinity):
            origin = body.interior_point() if hasattr(body, "interior_point") else None
            return origin, e1, e2
    raise PreconditionUnsatisfied("the transverse coordinate is bounded below on the body")


def _is_interior(body, c, h=Fraction(1, 1024)):
    return all(body.contains(add(c, scale(s * h, unit(2, i)))) for i in range(2) for s in (1, -1))


def hidden_set_2d(C, n, tol=DEFAULT_TOL, norm=None, budget=200):
    """``n`` points hidden behind a planar body, the k-th farther than ``k`` from it."""
    norm = as_norm(norm)
    if isinstance(C, HPolyhedron):
        C = PolyhedralBody(C)
    if n < 1:
        raise InvalidInput("need at least one point")
    origin, e1, e2 = hiding_frame(C)
    if origin is None:
        raise PreconditionUnsatisfied("body has no known interior point")
    tol = q(tol)

    def target(k):
        return k + 2 * tol

    t = ray_level_search(origin, sub(e1, e2), target(0), C, tol, norm)
    pts = [add(origin, scale(t, sub(e1, e2)))]
    centres = []
    while len(pts) < n:
        k = len(pts)
        al, be = _coords(e1, e2, sub(pts[-1], origin))
        beta = 2 * be
        s = 2 * al + 1
        for _ in range(budget):
            c = add(origin, add(scale(s, e1), scale(beta, e2)))
            if _is_interior(C, c):
                break
            s *= 2
        else:
            raise BudgetExceeded("no interior point found for the inductive step")
        v = sub(c, pts[-1])
        t = ray_level_search(c, v, target(k), C, tol, norm)
        pts.append(add(c, scale(t, v)))
        centres.append(c)
    W = verify_hidden_set(pts, C, tol, norm)
    coords = [_coords(e1, e2, sub(p, origin)) for p in pts]
    for k, (al, be) in enumerate(coords):
        if not W.bounds[k] > k:
            raise GeometryError(f"distance bound for point {k} is not above {k}")
        if not (al > 0 and be < 0):
            raise GeometryError("point left the quadrant of the construction")
        if k:
            pa, pb = coords[k - 1]
            if not (al > pa and be < pb and -be / al < -pb / pa):
                raise GeometryError("monotonicity of the construction failed")
    W.notes.update({"origin": origin, "e1": e1, "e2": e2, "centres": centres, "coords": coords})
    return W


# ---------------------------------------------------------------- packing

@dataclass
class PackingFamily:
    hidden: HidingWitness  # the set B
    members: dict  # bitmask -> VPolyhedron (polygonized conv(C + beta))
    distances: list  # 2^k x 2^k matrix of exact distances between members
    delta: Fraction  # polygonization error bound
    delta_report: Fraction


def _chord_gap(body, s0, s1):
    """Vertical gap between the chord and the tangent corner over ``[s0, s1]``."""
    p0, p1 = body.curve_point(s0), body.curve_point(s1)
    (a0, b0), (a1, b1) = body.tangent_row(s0), body.tangent_row(s1)
    det = a0[0] * a1[1] - a0[1] * a1[0]
    x = (b0 * a1[1] - b1 * a0[1]) / det
    y = (a0[0] * b1 - a1[0] * b0) / det
    lam = (x - p0[0]) / (p1[0] - p0[0])
    chord_y = p0[1] + lam * (p1[1] - p0[1])
    return chord_y - y


def offset_hidden_set(C, eps, k, tol=DEFAULT_TOL, norm=None, budget=60):
    """``k`` points at distance at least ``eps`` from an epigraph body, hidden behind it.

    Each point sits on the outward normal of a boundary sample.  Samples
    alternate between the two sides of the body, and each new one moves
    outwards only until all of its segments dip into the body.
    """
    norm = as_norm(norm)
    eps = q(eps)
    dual = norm.dual()

    def lift(s):
        a, _ = C.tangent_row(s)
        # dist to the tangent half-plane is lam * (a.a) / ||a||_*
        lam = eps * dual(a) / dot(a, a)
        return add(C.curve_point(s), scale(lam, a))

    def fits(p, pts):
        return not C.contains(p) and all(segment_certificate(C, p, x, tol) is not None for x in pts)

    pts, params = [], []
    for i in range(k):
        sign = 1 if i % 2 == 0 else -1
        if i % 2 == 1 and fits(lift(C.mirror_param(params[-1])), pts):
            params.append(C.mirror_param(params[-1]))
            pts.append(lift(params[-1]))
            continue
        step = ONE
        for _ in range(budget):
            s = C.step_param(params[-1] if params else None, step, sign)
            if fits(lift(s), pts):
                break
            step *= 2
        else:
            raise BudgetExceeded("could not spread the offset points far enough")
        params.append(s)
        pts.append(lift(s))
    W = verify_hidden_set(pts, C, tol, norm)
    if min(W.bounds) < eps - tol:
        raise GeometryError("offset points ended up too close to the body")
    return W


def packing_family(C, eps, k, tol=DEFAULT_TOL, norm=None, delta_max=Fraction(1, 1000)):
    """All ``2^k`` hulls ``conv(C + beta)`` for a hidden set ``B`` at distance ``eps``.

    The body is replaced by the convex hull of boundary samples in a window
    around ``B``; ``delta`` bounds the vertical chord error of that polygon.
    """
    norm = as_norm(norm)
    eps = q(eps)
    if k > 12:
        raise BudgetExceeded("family size 2^k is capped at k = 12", k=k)
    if k < 1:
        raise InvalidInput("k must be positive")
    try:
        far = offset_hidden_set(C, eps + Fraction(1, 2), k, tol, norm).points
    except BudgetExceeded:
        raise PreconditionUnsatisfied(f"no hidden set of size {k} found far from the body") from None
    c0 = C.interior_point()
    B = []
    for a in far:
        t = ray_level_search(c0, sub(a, c0), eps, C, tol, norm)
        B.append(add(c0, scale(t, sub(a, c0))))
    hidden = verify_hidden_set(B, C, tol, norm)

    # tall enough to hold the tangent points seen from every point of B
    height = C.window_height(B + [c0])
    xs = C.sample_params(height, 64)
    while True:
        gaps = [_chord_gap(C, s0, s1) for s0, s1 in zip(xs, xs[1:])]
        if 2 * max(gaps) <= delta_max:
            break
        refined = [xs[0]]
        for s1, g in zip(xs[1:], gaps):
            if 2 * g > delta_max:
                refined.append((refined[-1] + s1) / 2)
            refined.append(s1)
        xs = refined
    delta = max(gaps)
    samples = [C.curve_point(s) for s in xs]
    rays = vrep_of(C.recession_cone()).rays
    members, regions = {}, {}
    for mask in range(2 ** k):
        beta = [B[i] for i in range(k) if mask >> i & 1]
        R = PlanarRegion(samples + beta, rays)
        regions[mask] = R
        members[mask] = R.to_vpoly()
    cache = {}

    def dist(i, mask):
        if (i, mask) not in cache:
            cache[(i, mask)] = regions[mask].distance(B[i], norm)
        return cache[(i, mask)]

    size = 2 ** k
    D = [[ZERO] * size for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            # members share the sampled polygon, so only the extra points matter
            d = max([dist(i, b) for i in range(k) if a >> i & 1 and not b >> i & 1] +
                    [dist(i, a) for i in range(k) if b >> i & 1 and not a >> i & 1])
            D[a][b] = D[b][a] = d
    return PackingFamily(hidden, members, D, delta, 2 * delta)


# ---------------------------------------------------------------- biorthogonal systems

def _is_bounded(C):
    for i in range(C.dim):
        for s in (1, -1):
            if not isinstance(support_value(C, scale(s, unit(C.dim, i))), Finite):
                return False
    return True


def _min_norm_lp(constraints, n, norm):
    """``min ||x||`` subject to ``f.x == rhs`` for ``(f, rhs)`` in ``constraints``."""
    if norm.kind == "sup":
        extra = 1
        rows = []
        for i in range(n):
            e = unit(n, i)
            rows.append((e + (-ONE,), ZERO))
            rows.append((neg(e) + (-ONE,), ZERO))
        obj = zeros(n) + (ONE,)
    else:
        extra = n
        rows = []
        for i in range(n):
            e, s = unit(n, i), neg(unit(n, i))
            rows.append((e + s, ZERO))
            rows.append((neg(e) + s, ZERO))
        obj = zeros(n) + (ONE,) * n
    for f, rhs in constraints:
        rows.append((f + zeros(extra), rhs))
        rows.append((neg(f) + zeros(extra), -rhs))
    return lp_solve(LPProblem(obj, tuple(rows), "min"))


def _interior_origin(C):
    if not all(b > 0 for _, b in C.rows):
        raise PreconditionUnsatisfied("the origin must be an interior point of C")


def biorthogonal_sequence(C, k, norm=None):
    """``k`` pairs ``(x_n, x*_n)`` with ``x*_n(x_m) = [n == m]``, ``||x*_n|| = 1 <= ||x_n|| < 4``."""
    norm = as_norm(norm)
    dual = norm.dual()
    C = hrep_of(C) if isinstance(C, VPolyhedron) else C
    if not _is_bounded(C):
        raise UnboundedBody("the recession cone must be trivial")
    _interior_origin(C)
    n = C.dim
    if k > n:
        raise DimensionExhausted(f"at most {n} pairs fit in dimension {n}")
    pairs = []
    for idx in range(k):
        found = None
        for j in range(n):
            e = unit(n, j)
            f = e
            for p in pairs:
                f = sub(f, scale(dot(e, p.x), p.xstar))
            if is_zero(f):
                continue
            f = scale(1 / dual(f), f)
            cons = [(p.xstar, ZERO) for p in pairs] + [(f, ONE)]
            out = _min_norm_lp(cons, n, norm)
            if isinstance(out, Optimal) and out.value < 4:
                found = BiorthogonalPair(out.point[:n], f, norm)
                break
        if found is None:
            raise DimensionExhausted(f"no admissible functional at step {idx}")
        pairs.append(found)
    for a in pairs:
        for b in pairs:
            assert dot(a.xstar, b.x) == (1 if a is b else 0)
    return pairs


@dataclass
class Approximant:
    body: HPolyhedron  # the set C_eps
    witness: HidingWitness
    pairs: list
    sups: list  # sup of each functional over C
    eps: Fraction


def positively_hiding_approximant(C, eps, k, norm=None):
    """An ``eps``-close polyhedron hiding ``k`` points at distance at least ``eps/16``."""
    norm = as_norm(norm)
    eps = q(eps)
    C = hrep_of(C) if isinstance(C, VPolyhedron) else C
    pairs = biorthogonal_sequence(C, k, norm)
    neighbourhood = hrep_of(minkowski_sum(vrep_of(C), VPolyhedron(C.dim, tuple(norm.ball_vertices(C.dim, eps)))))
    sups, centres = [], []
    for p in pairs:
        s = support_value(C, p.xstar)
        sups.append(s.value)
        centres.append(s.point)
    caps = tuple((p.xstar, s + eps / 8) for p, s in zip(pairs, sups))
    C_eps = HPolyhedron(C.dim, neighbourhood.rows + caps)
    pts = [add(c, scale(eps / 4, p.x)) for c, p in zip(centres, pairs)]
    bounds = [point_distance(a, C_eps, norm) for a in pts]
    if any(b < eps / 16 for b in bounds):
        raise GeometryError("a hidden point is closer than eps/16")
    certs = {}
    for i, j in combinations(range(len(pts)), 2):
        mid = scale(Fraction(1, 2), add(pts[i], pts[j]))
        if not C_eps.contains(mid):
            raise SegmentMissesBody(i, j, "midpoint outside the approximant")
        certs[(i, j)] = mid
    W = HidingWitness(pts, C_eps, bounds, certs, {"centres": centres})
    check_witness(W)
    return Approximant(C_eps, W, pairs, sups, eps)


def approximant_sandwich(C, C_eps, eps, directions, norm=None):
    """Check ``h_C(u) <= h_{C_eps}(u) <= h_C(u) + eps ||u||_*`` on every direction."""
    dual = as_norm(norm).dual()
    for u in directions:
        lo = support_value(C, u).value
        mid = support_value(C_eps, u).value
        if not (lo <= mid <= lo + eps * dual(u)):
            return False
    return True
