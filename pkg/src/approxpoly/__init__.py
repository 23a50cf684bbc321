"""Exact convex geometry: Hausdorff distances to recession cones, hidden sets,
and polyhedral approximation of closed convex sets in finite dimension."""
from .bodies import ConvexBodyOracle, Hyperbola, Parabola, PolyhedralBody, make_body
from .classifier import (ApproximativelyPolyhedral, DistanceBracket, InfinitelyHiding, classify,
                         epsilon_net)
from .errors import GeometryError
from .hausdorff import (directed_distance, hausdorff_distance, ray_level_search, scaling_bound_check,
                        truncation_radius)
from .hiding import (HidingWitness, biorthogonal_sequence, hidden_set_2d, hull_hiding_transfer,
                     inflate_hidden_set, lift_hidden_set, packing_family,
                     positively_hiding_approximant, verify_hidden_set)
from .lp import LPProblem, lp_solve
from .norms import SUM, SUP, Norm
from .outcomes import Finite, Infinite, PlusInfinity, Undecided
from .polyhedra import (HPolyhedron, QuotientMap, VPolyhedron, hrep_of, lineality_space,
                        minkowski_sum_cone, point_distance, polar_cone, quotient_project,
                        recession_cone, support_value, vrep_of)
from .svg import render_svg

__all__ = [name for name in dir() if not name.startswith("_")]
