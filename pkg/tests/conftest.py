import sys
import random
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from approxpoly.polyhedra import HPolyhedron

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positive = st.fractions(min_value=Fraction(1, 6), max_value=5, max_denominator=6)


def vectors(n):
    return st.tuples(*[small] * n)


@st.composite
def polytopes(draw, n=2, rows=5):
    """Bounded H-polyhedra containing the origin: a box intersected with random cuts."""
    box = []
    for i in range(n):
        e = tuple(Fraction(int(k == i)) for k in range(n))
        box.append((e, draw(positive)))
        box.append((tuple(-x for x in e), draw(positive)))
    cuts = draw(st.lists(st.tuples(vectors(n), positive), max_size=rows))
    return HPolyhedron(n, tuple(box + cuts))


def random_box(rng, n, spread=4):
    rows = []
    for i in range(n):
        e = tuple(Fraction(int(k == i)) for k in range(n))
        rows.append((e, Fraction(rng.randint(1, spread))))
        rows.append((tuple(-x for x in e), Fraction(rng.randint(0, spread))))
    return rows


def rng_for(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
