"""
Exact Hausdorff distances between polyhedra
===========================================

Everything here is computed in rational arithmetic.  Distances between
polyhedra are finite exactly when their recession cones coincide; when
they are not, the answer carries a direction that escapes.
"""
# %%
from fractions import Fraction

from approxpoly import (HPolyhedron, VPolyhedron, epsilon_net, hausdorff_distance, hrep_of,
                        recession_cone, truncation_radius, vrep_of)

strip = hrep_of(VPolyhedron(2, ((Fraction(0), Fraction(0)), (Fraction(3), Fraction(1))),
                            ((Fraction(0), Fraction(1)),)))
K = recession_cone(strip)
print("recession cone generators:", vrep_of(K).rays)
print("distance to its cone:", hausdorff_distance(strip, K))

# %%
# Tilt the ray a little and the distance becomes infinite.
tilted = hrep_of(VPolyhedron(2, ((Fraction(0), Fraction(0)),), ((Fraction(1, 10), Fraction(1)),)))
print("distance to a tilted cone:", hausdorff_distance(strip, tilted))

# %%
# Unbounded sets can be cut down to a bounded piece plus the cone with a
# controlled error, then replaced by grid points.
r, cut = truncation_radius(strip, K, Fraction(1, 4))
print("truncation radius:", r, "with", len(cut.points), "vertices")
points, net = epsilon_net(strip, Fraction(1, 4), Fraction(1, 8))
print("grid net:", points)
print("net distance:", hausdorff_distance(net, strip))

# %%
# Norms matter: the same pair measured in the sum norm.
from approxpoly import SUM

square = HPolyhedron(2, tuple(SUM.ball_rows(2)))
print("sum-norm distance from the diamond to the origin:",
      hausdorff_distance(square, VPolyhedron(2, ((Fraction(0), Fraction(0)),)), SUM))
