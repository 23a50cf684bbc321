"""
Two curved bodies, two verdicts
===============================

The parabola and the hyperbola are both closed convex sets in the plane
with polyhedral recession cones.  Only one of them stays at bounded
distance from its cone.  This script classifies both and draws them.
"""
# %%
# Classify the parabola ``y >= x^2``.  Its cone is the vertical ray, and the
# gap between body and ray grows without bound, so the classifier answers
# with a hidden set whose k-th point is farther than k from the body.
from pathlib import Path

from approxpoly import Hyperbola, Parabola, classify, render_svg

par = classify(Parabola())
print(par.verdict)
for k, (p, b) in enumerate(zip(par.witness.points, par.witness.bounds)):
    print(f"  point {k}: ({float(p[0]):9.2f}, {float(p[1]):9.2f})  distance > {float(b):.2f}")

# %%
# The hyperbola ``y >= sqrt(x^2 + 1)`` lives inside the cone ``y >= |x|``.
# The classifier squeezes the body between two polygons and reports a
# bracket on the distance to the cone.
hyp = classify(Hyperbola())
d = hyp.dist_to_cone
print(hyp.verdict, f"distance to cone in [{float(d.lo)}, {float(d.hi)}]")
print("approximant vertices:", len(hyp.approximant.points), "error <=", float(hyp.approximant_error))

# %%
# Pictures.  The cone is shaded under the body outline; the hidden set of
# the parabola is drawn with its certificate chords.
out = Path(__file__).with_name("figures")
out.mkdir(exist_ok=True)
W = par.witness
first = W.points[:3]
chords = [(first[i], first[j]) for i in range(3) for j in range(i + 1, 3)]
(out / "parabola.svg").write_text(render_svg(Parabola(), Parabola().recession_cone(), first, chords))
(out / "hyperbola.svg").write_text(render_svg(Hyperbola(), hyp.cone, viewport=(-4, -1, 4, 7)))
print("figures written to", out)
