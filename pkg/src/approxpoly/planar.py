"""Exact planar shortcuts for polygons with hundreds of vertices.

The generic conversions go through double description, which is quadratic
in the number of generators per step.  In the plane a monotone-chain hull
gives the same information directly, and the distance from a point to a
convex region is a minimum over its boundary pieces.
"""
from .errors import UnsupportedDimension
from .norms import as_norm
from .polyhedra import VPolyhedron
from .rational import ZERO, dot, is_zero, q, sub, vec


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Counter-clockwise hull vertices with collinear points dropped."""
    pts = sorted(set(vec(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _perp(d):
    return (-d[1], d[0])


def _breakpoint_min(u, d, lo, hi, norm):
    """``min ||u - s d||`` over ``s`` in ``[lo, hi]`` (``hi=None`` for a ray)."""
    cands = {lo}
    if hi is not None:
        cands.add(hi)
    for i in range(2):
        if d[i]:
            cands.add(u[i] / d[i])
    if norm.kind == "sup":
        for sgn in (1, -1):
            den = d[0] - sgn * d[1]
            if den:
                cands.add((u[0] - sgn * u[1]) / den)
    best = None
    for s in cands:
        if s < lo or (hi is not None and s > hi):
            continue
        val = norm((u[0] - s * d[0], u[1] - s * d[1]))
        if best is None or val < best:
            best = val
    return best


def segment_distance(p, a, b, norm=None):
    """Exact distance from ``p`` to the segment ``[a, b]``."""
    norm = as_norm(norm)
    return _breakpoint_min(sub(p, a), sub(b, a), ZERO, q(1), norm)


def ray_distance(p, a, r, norm=None):
    norm = as_norm(norm)
    return _breakpoint_min(sub(p, a), r, ZERO, None, norm)


class PlanarRegion:
    """``conv(points) + cone(rays)`` in the plane, with exact queries."""

    def __init__(self, points, rays=()):
        self.points = [vec(p) for p in points]
        if not self.points or any(len(p) != 2 for p in self.points):
            raise UnsupportedDimension("planar regions need 2-D points")
        self.rays = [vec(r) for r in rays if not is_zero(vec(r))]
        self.hull = convex_hull(self.points)
        h = self.hull
        self.segments = [(h[i], h[(i + 1) % len(h)]) for i in range(len(h))] if len(h) > 2 else (
            [(h[0], h[1])] if len(h) == 2 else [])
        if len(h) > 2:
            # every facet is a hull edge or runs parallel to a ray
            normals = {(b[1] - a[1], a[0] - b[0]): a for a, b in self.segments}
            for r in self.rays:
                normals.setdefault(_perp(r), None)
                normals.setdefault((r[1], -r[0]), None)
        else:
            dirs = [sub(b, a) for a, b in self.segments] + self.rays + [(q(1), ZERO), (ZERO, q(1))]
            normals = dict.fromkeys((s * u[0], s * u[1]) for d in dirs for u in (_perp(d), d) for s in (1, -1))
        self.rows = []
        self.ray_pieces = []
        for u, at in normals.items():
            if all(dot(u, r) <= 0 for r in self.rays):
                top = dot(u, at) if at is not None else max(dot(u, p) for p in h)
                self.rows.append((u, top))
                flat = [r for r in self.rays if dot(u, r) == 0]
                if flat:
                    for v in h:
                        if dot(u, v) == top:
                            for r in flat:
                                self.ray_pieces.append((v, r))
        self.ray_pieces = list(dict.fromkeys(self.ray_pieces))

    @classmethod
    def from_vpoly(cls, Q):
        if Q.dim != 2:
            raise UnsupportedDimension("planar regions need dimension 2")
        return cls(Q.points, Q.rays)

    def to_vpoly(self):
        return VPolyhedron(2, tuple(self.hull), tuple(self.rays))

    def contains(self, p):
        p = vec(p)
        return all(dot(u, p) <= b for u, b in self.rows)

    def distance(self, p, norm=None):
        norm = as_norm(norm)
        p = vec(p)
        if self.contains(p):
            return ZERO
        best = None
        if len(self.hull) == 1:
            best = norm(sub(p, self.hull[0]))
        px, py = float(p[0]), float(p[1])

        def gap(seg):
            # float distance to the bounding box, a lower bound up to rounding
            (ax, ay), (bx, by) = seg
            return max(min(ax, bx) - px, px - max(ax, bx), min(ay, by) - py, py - max(ay, by), 0.0)

        boxes = sorted((gap(((float(a[0]), float(a[1])), (float(b[0]), float(b[1])))), i)
                       for i, (a, b) in enumerate(self.segments))
        for g, i in boxes:
            if best is not None and g > float(best) * (1 + 1e-9) + 1e-9:
                break
            d = segment_distance(p, *self.segments[i], norm)
            if best is None or d < best:
                best = d
        for a, r in self.ray_pieces:
            d = ray_distance(p, a, r, norm)
            if best is None or d < best:
                best = d
        return best


def envelope_vertices(tangent_rows, extra_rows):
    """Vertices of ``{x : rows}`` when ``tangent_rows`` are sorted by slope.

    Every tangent row must touch the region.  Then a vertex is either the
    meeting point of two consecutive tangents or involves an extra row.
    """
    rows = list(tangent_rows) + list(extra_rows)
    cands = []
    pairs = [(tangent_rows[i], tangent_rows[i + 1]) for i in range(len(tangent_rows) - 1)]
    pairs += [(e, t) for e in extra_rows for t in tangent_rows]
    pairs += [(e, f) for i, e in enumerate(extra_rows) for f in extra_rows[i + 1:]]
    for (a1, b1), (a2, b2) in pairs:
        det = a1[0] * a2[1] - a1[1] * a2[0]
        if det == 0:
            continue
        x = (b1 * a2[1] - b2 * a1[1]) / det
        y = (a1[0] * b2 - a2[0] * b1) / det
        cands.append((x, y))
    out = []
    for p in dict.fromkeys(cands):
        if all(dot(a, p) <= b for a, b in rows):
            out.append(p)
    return out
