"""Command line front end: ``approxpoly <command> [options]``.

Exit status is 0 on success, 2 on a geometric or input error (with a JSON
error document on stdout) and 1 when a file cannot be read or written.
"""
import argparse
import json
import random
import sys

from .bodies import BODIES, PolyhedralBody, make_body
from .classifier import classify, epsilon_net
from .errors import GeometryError, InvalidInput, UnsupportedDimension
from .hausdorff import hausdorff_distance, ray_level_search_report, truncation_radius
from .hiding import (approximant_sandwich, biorthogonal_sequence, hidden_set_2d, packing_family,
                     positively_hiding_approximant, verify_hidden_set)
from .norms import as_norm
from .polyhedra import (HPolyhedron, VPolyhedron, hrep_of, lineality_space, random_directions,
                        recession_cone, vrep_of)
from .rational import q, vec
from .serialization import dumps, encode, loads_set
from .svg import render_svg

COMMANDS = ("classify", "hausdorff", "recession-cone", "ray-search", "truncate", "hidden-set",
            "packing", "biorthogonal", "approximant", "net", "plot")


class IOFailure(Exception):
    pass


def load_set(arg):
    """A body name, an inline JSON document, or a path to one."""
    if arg in BODIES:
        return make_body(arg)
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise IOFailure(str(exc)) from None
    return loads_set(text)


def _vector(text):
    return vec(x for x in text.split(",") if x.strip())


def _as_h(S):
    if isinstance(S, VPolyhedron):
        return hrep_of(S)
    if isinstance(S, HPolyhedron):
        return S
    raise InvalidInput("this command needs a polyhedron, not an oracle body")


def _ball(n, norm):
    return HPolyhedron(n, tuple(norm.ball_rows(n)))


def _polytope_input(args, norm):
    if args.ball:
        return _ball(args.ball, norm)
    if not args.set:
        raise InvalidInput("give a set or --ball N")
    return _as_h(load_set(args.set))


def _opt(value, default):
    return q(default) if value is None else value


def cmd_classify(args, norm):
    C = load_set(args.set or args.body)
    kw = {"norm": norm, "eps": _opt(args.eps, "1/100")}
    if args.budget is not None:
        kw["budget"] = args.budget
    if args.tol is not None:
        kw["tol"] = args.tol
    return classify(C, **kw)


def cmd_hausdorff(args, norm):
    return hausdorff_distance(load_set(args.first), load_set(args.second), norm)


def cmd_recession_cone(args, norm):
    P = _as_h(load_set(args.set))
    K = recession_cone(P)
    return {"cone": K, "generators": vrep_of(K).rays, "lineality": lineality_space(P)}


def cmd_ray_search(args, norm):
    C = load_set(args.set)
    if isinstance(C, VPolyhedron):
        C = hrep_of(C)
    kw = {} if args.tol is None else {"tol": args.tol}
    R = ray_level_search_report(_vector(args.start), _vector(args.direction), _opt(args.eps, 1), C,
                                norm=norm, **kw)
    return {"t": R.t, "probes": len(R.probes)}


def cmd_truncate(args, norm):
    A = _as_h(load_set(args.set))
    K = _as_h(load_set(args.cone)) if args.cone else recession_cone(A)
    kw = {} if args.budget is None else {"budget": args.budget}
    r, A_r = truncation_radius(A, K, _opt(args.eps, "1/2"), norm, **kw)
    return {"radius": r, "truncation": A_r}


def cmd_hidden_set(args, norm):
    C = load_set(args.set or args.body)
    kw = {} if args.tol is None else {"tol": args.tol}
    if isinstance(C, HPolyhedron):
        C = PolyhedralBody(C)
    if args.points:
        text = args.points
        if not text.lstrip().startswith("["):
            try:
                with open(text, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise IOFailure(str(exc)) from None
        try:
            pts = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"malformed JSON: {exc}") from None
        return verify_hidden_set([vec(p) for p in pts], C, norm=norm, **kw)
    return hidden_set_2d(C, args.n, norm=norm, **kw)


def cmd_packing(args, norm):
    C = load_set(args.set or args.body)
    kw = {} if args.tol is None else {"tol": args.tol}
    F = packing_family(C, _opt(args.eps, 1), args.k, norm=norm, **kw)
    return {"hidden": F.hidden, "distances": F.distances, "delta": F.delta,
            "delta_report": F.delta_report, "members": {str(m): P for m, P in F.members.items()}}


def cmd_biorthogonal(args, norm):
    C = _polytope_input(args, norm)
    pairs = biorthogonal_sequence(C, args.k, norm)
    return [{"x": p.x, "xstar": p.xstar} for p in pairs]


def cmd_approximant(args, norm):
    C = _polytope_input(args, norm)
    eps = _opt(args.eps, "1/2")
    A = positively_hiding_approximant(C, eps, args.k, norm)
    rng = random.Random(args.seed)
    probes = random_directions(C.dim, 32, rng)
    return {"approximant": A.body, "witness": A.witness, "sups": A.sups,
            "functionals": [p.xstar for p in A.pairs],
            "sandwich": approximant_sandwich(C, A.body, eps, probes, norm)}


def cmd_net(args, norm):
    A = _as_h(load_set(args.set))
    eps = _opt(args.eps, "1/4")
    step = args.grid_step if args.grid_step is not None else eps / 2
    F, C_F = epsilon_net(A, eps, step, norm)
    return {"points": F, "net": C_F, "distance": hausdorff_distance(C_F, A, norm)}


def cmd_plot(args, norm):
    C = load_set(args.set or args.body)
    points, segments, cone = [], [], None
    if isinstance(C, (HPolyhedron, VPolyhedron)):
        if C.dim != 2:
            raise UnsupportedDimension("only planar sets can be drawn")
        cone = recession_cone(_as_h(C))
    else:
        cone = C.recession_cone()
        if args.n:
            W = hidden_set_2d(C, args.n, norm=norm)
            points = W.points
            segments = [(W.points[i], W.points[j]) for i, j in W.pairs()]
    return render_svg(C, cone, points, segments)


HANDLERS = {
    "classify": cmd_classify, "hausdorff": cmd_hausdorff, "recession-cone": cmd_recession_cone,
    "ray-search": cmd_ray_search, "truncate": cmd_truncate, "hidden-set": cmd_hidden_set,
    "packing": cmd_packing, "biorthogonal": cmd_biorthogonal, "approximant": cmd_approximant,
    "net": cmd_net, "plot": cmd_plot,
}


def _rational(text):
    try:
        return q(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norm", choices=("sup", "sum"), default="sup")
    common.add_argument("--eps", type=_rational)
    common.add_argument("--tol", type=_rational)
    common.add_argument("--budget", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out")

    parser = argparse.ArgumentParser(prog="approxpoly", description="Exact convex geometry tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("classify", "approximatively polyhedral or infinitely hiding")
    p.add_argument("set", nargs="?")
    p.add_argument("--body", choices=sorted(BODIES))
    p = add("hausdorff", "exact Hausdorff distance between two polyhedra")
    p.add_argument("first")
    p.add_argument("second")
    p = add("recession-cone", "recession cone and lineality space")
    p.add_argument("set")
    p = add("ray-search", "first parameter where a ray leaves the eps-neighbourhood")
    p.add_argument("set")
    p.add_argument("--start", required=True, help="comma separated rationals")
    p.add_argument("--direction", required=True, help="comma separated rationals")
    p = add("truncate", "truncation radius with Hausdorff error at most eps")
    p.add_argument("set")
    p.add_argument("--cone")
    p = add("hidden-set", "build or verify a hidden set")
    p.add_argument("set", nargs="?")
    p.add_argument("--body", choices=sorted(BODIES))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--points", help="JSON list of points to verify instead of building")
    p = add("packing", "family of 2^k hulls pairwise eps apart")
    p.add_argument("set", nargs="?")
    p.add_argument("--body", choices=sorted(BODIES))
    p.add_argument("--k", type=int, default=3)
    for name, text in (("biorthogonal", "biorthogonal pairs for a bounded body"),
                       ("approximant", "positively hiding approximant of a bounded body")):
        p = add(name, text)
        p.add_argument("set", nargs="?")
        p.add_argument("--ball", type=int, help="use the unit ball of the norm in this dimension")
        p.add_argument("--k", type=int, default=3)
    p = add("net", "polyhedral eps-net member with grid vertices")
    p.add_argument("set")
    p.add_argument("--grid-step", type=_rational)
    p = add("plot", "SVG picture of a planar set")
    p.add_argument("set", nargs="?")
    p.add_argument("--body", choices=sorted(BODIES))
    p.add_argument("--n", type=int, default=0, help="draw a hidden set of this size")
    return parser


def _emit(text, out):
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise IOFailure(str(exc)) from None
    else:
        sys.stdout.write(text)


def run(argv=None):
    args = build_parser().parse_args(argv)
    norm = as_norm(args.norm)
    try:
        if args.command in ("classify", "hidden-set", "packing", "plot") and not (args.set or args.body):
            raise InvalidInput("give a set or --body")
        result = HANDLERS[args.command](args, norm)
        if args.command == "plot":
            _emit(result, args.out)
        else:
            _emit(dumps({"command": args.command, "result": result}), args.out)
        return 0
    except IOFailure as exc:
        sys.stdout.write(dumps({"error": "IOError", "message": str(exc)}))
        return 1
    except GeometryError as exc:
        sys.stdout.write(dumps({"error": exc.code, "message": str(exc), "details": encode(exc.details)}))
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
