"""Deciding whether a convex set sits at finite Hausdorff distance from its cone.

Polyhedra always do, with an exact distance.  For the planar oracle bodies
the gap between the body and its recession cone is probed on doubling
radii.  A gap that keeps growing past a threshold yields an infinitely
hiding witness.  A gap that settles yields a polyhedral approximant whose
distance to the body is certified by squeezing the body between two
polygons.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .bodies import DEFAULT_TOL, EpigraphBody, PolyhedralBody
from .errors import BudgetExceeded, GridTooCoarse, InvalidInput, UnsupportedBody
from .hausdorff import hausdorff_distance, truncation_radius
from .hiding import HidingWitness, hidden_set_2d
from .norms import as_norm
from .outcomes import Finite, PlusInfinity, Undecided
from .planar import PlanarRegion, envelope_vertices
from .polyhedra import (HPolyhedron, VPolyhedron, hrep_of, polar_cone, recession_cone,
                        require_nonempty, vrep_of)
from .rational import ONE, ZERO, q, sub


@dataclass(frozen=True)
class DistanceBracket:
    """``lo <= d <= hi`` for a distance that is only known up to tolerance."""

    lo: Fraction
    hi: Fraction

    is_finite = True

    @property
    def value(self):
        return (self.lo + self.hi) / 2


@dataclass
class ApproximativelyPolyhedral:
    cone: HPolyhedron
    dist_to_cone: object  # Finite or DistanceBracket
    approximant: VPolyhedron
    approximant_error: Fraction = ZERO  # certified bound on dH(approximant, C)
    report: dict = field(default_factory=dict)

    verdict = "ApproximativelyPolyhedral"


@dataclass
class InfinitelyHiding:
    witness: HidingWitness
    report: dict = field(default_factory=dict)

    verdict = "InfinitelyHiding"


Undecided.verdict = "Undecided"


def classify(C, eps=Fraction(1, 100), budget=40, norm=None, threshold=10**6, growth=Fraction(5, 4),
             witness_size=5, tol=DEFAULT_TOL):
    """Classify ``C`` as approximatively polyhedral or infinitely hiding.

    ``budget`` is the largest exponent of the probe radii ``2^0 .. 2^budget``.
    """
    norm = as_norm(norm)
    eps = q(eps)
    if isinstance(C, PolyhedralBody):
        C = C.P
    if isinstance(C, VPolyhedron):
        C = hrep_of(C)
    if isinstance(C, HPolyhedron):
        return _classify_polyhedron(C, norm)
    if not isinstance(C, EpigraphBody) or C.dim != 2:
        raise UnsupportedBody("only the planar epigraph bodies can be classified")
    return _classify_body(C, eps, budget, norm, q(threshold), q(growth), witness_size, q(tol))


def _classify_polyhedron(P, norm):
    require_nonempty(P)
    V = recession_cone(P)
    d = hausdorff_distance(P, V, norm)
    assert isinstance(d, Finite)
    return ApproximativelyPolyhedral(V, d, vrep_of(P), ZERO, {"exact": True})


def _cone_vertices(V, r, norm):
    ball = HPolyhedron(2, V.rows + tuple(norm.ball_rows(2, r)))
    return vrep_of(ball).points


def gap_lower_bound(C, V_region, V, r, norm, tol, samples=16):
    """A lower bound on the gap between ``C`` and ``V`` at scale ``r``.

    Both directions are probed: boundary samples of ``C`` up to local
    height ``r`` against ``V``, and the corners of ``V`` cut by the ball of
    radius ``r`` against ``C``.
    """
    best = ZERO
    for s in C.sample_params(r, samples):
        best = max(best, V_region.distance(C.curve_point(s), norm))
    for v in _cone_vertices(V, r, norm):
        lo, _ = C.distance_bounds(v, norm, tol)
        best = max(best, lo)
    return best


def _classify_body(C, eps, budget, norm, threshold, growth, witness_size, tol):
    V = C.recession_cone()
    Vv = vrep_of(V)
    V_region = PlanarRegion(Vv.points, Vv.rays)
    gaps = []
    calm = 0
    r = ONE
    for step in range(budget + 1):
        g = gap_lower_bound(C, V_region, V, r, norm, tol)
        prev = gaps[-1][1] if gaps else None
        gaps.append((r, g))
        if prev is not None and g > threshold and g >= growth * prev:
            witness = hidden_set_2d(C, witness_size, tol, norm)
            return InfinitelyHiding(witness, {"gaps": gaps})
        if prev is not None and g - prev < eps / 4:
            calm += 1
        else:
            calm = 0
        if calm >= 3:
            try:
                return _approximate(C, V, V_region, eps, norm, tol, r, gaps)
            except BudgetExceeded:
                calm = 0
        r *= 2
    return Undecided({"gaps": gaps, "reason": "gap neither diverged nor settled"})


def _approximate(C, V, V_region, eps, norm, tol, r, gaps, rounds=10):
    """Certified ``conv(samples) + V`` within ``eps`` of ``C``.

    The body lies between the inner polygon and the outer polygon cut out
    by tangent lines and by the supporting lines of the polar cone.
    """
    polar = vrep_of(polar_cone(V)).rays
    caps = []
    for w in polar:
        s = C.support(w, tol)
        if isinstance(s, PlusInfinity):
            raise BudgetExceeded("support along a polar direction is infinite")
        caps.append((w, s.value))
    height, count = max(r, 4 / eps), 64
    for _ in range(rounds):
        params = C.sample_params(height, count)
        inner = PlanarRegion([C.curve_point(s) for s in params], V_region.rays)
        tangents = [C.tangent_row(s) for s in params]
        corners = envelope_vertices(tangents, caps)
        # the polar rows force rec(outer) = V, so outer = conv(corners) + V
        outer = PlanarRegion(corners, V_region.rays) if corners else None
        if outer is not None:
            err = max(inner.distance(p, norm) for p in corners)
            if err <= eps:
                lo = max(_far_point(inner.hull, V_region, norm), _far_point(V_region.hull, outer, norm))
                hi = max(_far_point(corners, V_region, norm), _far_point(V_region.hull, inner, norm))
                approx = inner.to_vpoly()
                return ApproximativelyPolyhedral(V, DistanceBracket(lo, hi), approx, err,
                                                 {"gaps": gaps, "samples": len(params),
                                                  "height": height})
        height, count = height * 2, count * 2
    raise BudgetExceeded("approximant refinement did not reach the requested accuracy")


def _far_point(points, region, norm):
    """``max dist(p, region)`` over ``points``; exact for polygons whose rays lie in ``region``."""
    return max((region.distance(p, norm) for p in points), default=ZERO)


# ---------------------------------------------------------------- epsilon nets

def _grid_candidates(v, step, reach):
    base = [floor(x / step) for x in v]
    for off in product(range(-reach, reach + 2), repeat=len(v)):
        yield tuple(step * (b + o) for b, o in zip(base, off))


def epsilon_net(A, eps, grid_step, norm=None):
    """Grid points ``F`` inside ``A`` with ``dH(conv(F) + rec(A), A) < 2 eps``.

    ``A`` is first truncated to within ``eps/2``.  Each vertex of the
    truncation is replaced by a nearest grid point of ``A`` found within
    ``2 eps``; vertices without one are dropped.  The final bound is
    recomputed exactly and enforced.
    """
    norm = as_norm(norm)
    eps, grid_step = q(eps), q(grid_step)
    if eps <= 0 or grid_step <= 0:
        raise InvalidInput("eps and grid_step must be positive")
    if grid_step > eps:
        raise GridTooCoarse("grid step must not exceed eps", grid_step=str(grid_step))
    require_nonempty(A)
    K = recession_cone(A)
    _, A_r = truncation_radius(A, K, eps / 2, norm)
    reach = ceil(2 * eps / grid_step) + 1
    F = []
    for v in A_r.points:
        best = None
        for g in _grid_candidates(v, grid_step, reach):
            if A.contains(g):
                key = (norm(sub(g, v)), g)
                if best is None or key < best:
                    best = key
        if best is not None and best[0] < 2 * eps:
            F.append(best[1])
    if not F:
        raise GridTooCoarse("no grid point of the set near the truncation")
    F = list(dict.fromkeys(F))
    C_F = VPolyhedron(A.dim, tuple(F), tuple(A_r.rays))
    d = hausdorff_distance(C_F, A, norm)
    if not isinstance(d, Finite) or d.value >= 2 * eps:
        raise GridTooCoarse("the net misses the 2 eps bound", distance=str(getattr(d, "value", "inf")))
    return F, C_F
