"""Shared helpers for the test suite."""

from curvelab.errors import ArcDisjoint
from curvelab.flute import ABOVE, BELOW, LassoArc, lasso, standard_circle


def random_curve(rng, span=4, steps=3, winding=0):
    """A random iterated-lasso curve; with winding > 0 some arcs wind."""
    d = standard_circle(rng.randint(-2, 2))
    for _ in range(rng.randint(0, steps)):
        p = rng.randint(-span, span)
        side = rng.choice([ABOVE, BELOW])
        trace = ()
        if winding and rng.random() < 0.4:
            g = rng.randint(-span, span)
            trace = ((g, rng.choice(["U", "D"])),)
        try:
            d = lasso(d, LassoArc(p, trace, side))
        except ArcDisjoint:
            continue
    return d
