"""
Hidden sets and what they buy
=============================

A finite set hidden behind a convex body has every chord passing through
the body.  The constructions below build such sets, push them apart, and
use them to separate many convex sets at once.
"""
# %%
from fractions import Fraction

from approxpoly import (HPolyhedron, Parabola, SUP, biorthogonal_sequence, hidden_set_2d,
                        packing_family, positively_hiding_approximant, verify_hidden_set)

W = hidden_set_2d(Parabola(), 6)
print("hidden behind the parabola:", [tuple(float(x) for x in p) for p in W.points])
print("independent re-check:", len(verify_hidden_set(W.points, Parabola()).certificates), "chords")

# %%
# Adding any subset of a hidden set to the body gives convex sets that are
# pairwise far apart: 2^k of them from k points.
fam = packing_family(Parabola(), 1, 3)
D = fam.distances
worst = min(D[i][j] for i in range(8) for j in range(8) if i != j)
print(f"8 hulls, closest pair at distance {float(worst):.6f}, error budget {float(fam.delta_report):.1e}")

# %%
# Bounded bodies hide nothing far away, but a slightly larger polyhedron
# can be built around them that hides points at a fixed distance.
ball = HPolyhedron(4, tuple(SUP.ball_rows(4)))
for p in biorthogonal_sequence(ball, 3):
    print("x =", p.x, " functional =", p.xstar)
A = positively_hiding_approximant(ball, Fraction(1, 2), 3)
print("hidden points at distances", [str(b) for b in A.witness.bounds])
