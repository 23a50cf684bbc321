"""Deterministic SVG pictures of planar bodies, cones and hidden sets.

Coordinates are rounded only when written out; nothing drawn here is fed
back into a computation.
"""
from fractions import Fraction

from .bodies import EpigraphBody, PolyhedralBody
from .errors import EmptyPolyhedron, UnsupportedDimension
from .planar import convex_hull
from .polyhedra import HPolyhedron, VPolyhedron, hrep_of, vrep_of
from .rational import q, vec

STYLE = {
    "cone": 'fill="#dde8f4" stroke="#6a8fb5" stroke-width="1"',
    "region": 'fill="#f4e6d2" fill-opacity="0.7" stroke="#b0782c" stroke-width="1"',
    "body": 'fill="none" stroke="#222222" stroke-width="1.5"',
    "segment": 'stroke="#c0392b" stroke-width="1" stroke-dasharray="4 3"',
    "point": 'fill="#c0392b"',
}


def _num(x):
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _check2(v):
    if len(v) != 2:
        raise UnsupportedDimension("only planar data can be drawn")
    return v


def _auto_viewport(points):
    if not points:
        return (Fraction(-4), Fraction(-1), Fraction(4), Fraction(7))
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    pad = max(max(xs) - min(xs), max(ys) - min(ys), 1) / 8
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def _clip(P, box):
    """Vertices of a polyhedral set cut down to the viewport, in drawing order."""
    H = hrep_of(P) if isinstance(P, VPolyhedron) else P
    if H.dim != 2:
        raise UnsupportedDimension("only planar data can be drawn")
    x0, y0, x1, y1 = box
    rows = H.rows + (((1, 0), x1), ((-1, 0), -x0), ((0, 1), y1), ((0, -1), -y0))
    try:
        return convex_hull(vrep_of(HPolyhedron(2, tuple((vec(a), q(b)) for a, b in rows))).points)
    except EmptyPolyhedron:
        return []


def _curve(body, box, count=240):
    x0, y0, x1, y1 = box
    height = max(abs(y0), abs(y1)) + abs(body.offset[1]) + max(abs(x0), abs(x1)) + abs(body.offset[0])
    pts = [body.curve_point(s) for s in body.sample_params(height, count)]
    return [p for p in pts if x0 <= p[0] <= x1 and y0 <= p[1] <= y1]


def render_svg(body=None, cone=None, points=(), segments=(), regions=(), viewport=None, size=480):
    """SVG text for a planar scene.

    ``body`` is an epigraph body or a planar polyhedron, ``cone`` a planar
    polyhedral cone drawn shaded underneath, ``points`` and ``segments``
    typically a hidden set and its certificate chords.
    """
    points = [_check2(vec(p)) for p in points]
    segments = [(_check2(vec(a)), _check2(vec(b))) for a, b in segments]
    if isinstance(body, PolyhedralBody):
        body = body.P
    if body is not None and getattr(body, "dim", 2) != 2:
        raise UnsupportedDimension("only planar bodies can be drawn")
    box = tuple(q(v) for v in viewport) if viewport else _auto_viewport(
        points + [p for s in segments for p in s])
    x0, y0, x1, y1 = box
    scale = Fraction(size) / max(x1 - x0, y1 - y0)

    def xy(p):
        return f"{_num((p[0] - x0) * scale)},{_num((y1 - p[1]) * scale)}"

    w, h = _num((x1 - x0) * scale), _num((y1 - y0) * scale)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    if cone is not None:
        poly = _clip(cone, box)
        if poly:
            out.append(f'<polygon points="{" ".join(xy(p) for p in poly)}" {STYLE["cone"]}/>')
    for R in regions:
        poly = _clip(R, box)
        if poly:
            out.append(f'<polygon points="{" ".join(xy(p) for p in poly)}" {STYLE["region"]}/>')
    if isinstance(body, EpigraphBody):
        curve = _curve(body, box)
        if curve:
            out.append(f'<polyline points="{" ".join(xy(p) for p in curve)}" {STYLE["body"]}/>')
    elif isinstance(body, (HPolyhedron, VPolyhedron)):
        poly = _clip(body, box)
        if poly:
            out.append(f'<polygon points="{" ".join(xy(p) for p in poly)}" {STYLE["body"]}/>')
    for a, b in segments:
        (ax, ay), (bx, by) = xy(a).split(","), xy(b).split(",")
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {STYLE["segment"]}/>')
    for p in points:
        cx, cy = xy(p).split(",")
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3" {STYLE["point"]}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
