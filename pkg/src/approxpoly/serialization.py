"""JSON documents for sets, outcomes and certificates.

Rationals travel as canonical strings (``"3"``, ``"-2/7"``) so that every
document re-parses to exactly the same values.
"""
import dataclasses
import json
from fractions import Fraction

from .bodies import BODIES, ConvexBodyOracle, make_body
from .errors import InvalidInput
from .hiding import HidingWitness
from .norms import Norm
from .outcomes import Finite, Infinite, PlusInfinity, Undecided
from .polyhedra import HPolyhedron, VPolyhedron
from .rational import fmt, vec


def _only(d, allowed, where):
    if not isinstance(d, dict):
        raise InvalidInput(f"{where} must be an object")
    extra = set(d) - set(allowed)
    if extra:
        raise InvalidInput(f"unknown fields in {where}: {sorted(extra)}")


def _matrix(rows, where):
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise InvalidInput(f"{where} must be a list of lists")
    return [vec(r) for r in rows]


def parse_set(doc):
    """An :class:`HPolyhedron`, :class:`VPolyhedron` or oracle body from a document."""
    _only(doc, ("hrep", "vrep", "body"), "set description")
    if len(doc) != 1:
        raise InvalidInput("a set description has exactly one of hrep, vrep, body")
    if "hrep" in doc:
        h = doc["hrep"]
        _only(h, ("A", "b", "dim"), "hrep")
        A = _matrix(h.get("A", []), "hrep.A")
        b = vec(h.get("b", []))
        if len(A) != len(b):
            raise InvalidInput("hrep.A and hrep.b differ in length")
        dim = h.get("dim", len(A[0]) if A else None)
        if dim is None:
            raise InvalidInput("hrep without rows needs an explicit dim")
        return HPolyhedron(int(dim), tuple(zip(A, b)))
    if "vrep" in doc:
        v = doc["vrep"]
        _only(v, ("points", "rays"), "vrep")
        points = _matrix(v.get("points", []), "vrep.points")
        rays = _matrix(v.get("rays", []), "vrep.rays")
        if not points:
            raise InvalidInput("vrep needs at least one point")
        return VPolyhedron(len(points[0]), tuple(points), tuple(rays))
    body = doc["body"]
    _only(body, ("kind", "offset"), "body")
    return make_body(body.get("kind"), vec(body.get("offset", (0, 0))))


def loads_set(text):
    try:
        return parse_set(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from None


def encode(obj):
    """Plain JSON-ready structure for any value the library returns."""
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, float):
        return fmt(Fraction(obj))
    if isinstance(obj, HPolyhedron):
        return {"hrep": {"A": [encode(a) for a, _ in obj.rows], "b": [fmt(b) for _, b in obj.rows],
                         "dim": obj.dim}}
    if isinstance(obj, VPolyhedron):
        return {"vrep": {"points": encode(obj.points), "rays": encode(obj.rays)}}
    if isinstance(obj, Finite):
        return {"finite": fmt(obj.value)}
    if isinstance(obj, Infinite):
        return {"infinite": {"witness": encode(obj.witness)}}
    if isinstance(obj, PlusInfinity):
        return {"plus_infinity": {"ray": encode(obj.ray)}}
    if isinstance(obj, Undecided):
        return {"verdict": "Undecided", "report": encode(obj.report)}
    if isinstance(obj, ConvexBodyOracle):
        return {"body": obj.describe()} if obj.kind in BODIES else encode(getattr(obj, "P", None))
    if isinstance(obj, HidingWitness):
        return {
            "points": encode(obj.points),
            "bounds": encode(obj.bounds),
            "certificates": [{"pair": list(k), "point": encode(obj.certificates[k])}
                             for k in obj.pairs()],
        }
    if isinstance(obj, Norm):
        return obj.kind
    if dataclasses.is_dataclass(obj):
        out = {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        if hasattr(obj, "verdict"):
            out["verdict"] = obj.verdict
        return out
    if isinstance(obj, dict):
        return {(k if isinstance(k, str) else json.dumps(encode(k))): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj):
    """Deterministic JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(encode(obj), sort_keys=True, indent=2) + "\n"
