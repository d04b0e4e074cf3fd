import random

import pytest

from curvelab.errors import InvalidDiagram, NotRealizable
from curvelab.flute import (
    canonicalize,
    diagram,
    diagram_from_json,
    diagram_to_json,
    standard_circle,
    translate,
    winding,
)
from curvelab.flute.diagram import _reversed, CrossingDiagram


def test_standard_circle_already_reduced():
    s0 = standard_circle(0)
    assert s0.size == 1
    assert canonicalize(s0) == s0


def test_bigon_insertion_cancels():
    # a vertical circle with a finger pushed through the seam: three
    # crossings in gap 0, two of which cancel
    wiggly = diagram([(0, "U"), (0, "D"), (0, "U")], [1, 2, 0])
    assert canonicalize(wiggly) == standard_circle(0)


def test_double_bigon_reduces_to_circle():
    # five crossings in gap 0 from two nested finger pushes
    d = diagram([(0, "U"), (0, "D"), (0, "U"), (0, "D"), (0, "U")], [1, 2, 3, 4, 0])
    assert canonicalize(d) == standard_circle(0)


def test_inessential_curve_rejected():
    # a contractible loop crossing the seam twice around no puncture
    with pytest.raises(NotRealizable, match="inessential"):
        canonicalize(diagram([(0, "U"), (0, "D")], [1, 0]))


def test_orientation_normalization():
    d = canonicalize(diagram([(0, "U")], [0]))
    rev_cr, rev_succ = _reversed(list(d.crossings), list(d.succ))
    assert canonicalize(CrossingDiagram(tuple(rev_cr), tuple(rev_succ))) == d


def test_validation_rejects_bad_input():
    with pytest.raises(InvalidDiagram):
        diagram([], [])
    with pytest.raises(InvalidDiagram):
        diagram([(0, "U"), (0, "U")], [1, 0])  # no alternation
    with pytest.raises(InvalidDiagram):
        diagram([(1, "U"), (0, "D")], [1, 0])  # gaps decrease
    with pytest.raises(InvalidDiagram):
        diagram([(0, "U"), (1, "D")], [0, 1])  # two cycles
    with pytest.raises(InvalidDiagram):
        diagram([(0, "U")], [0, 0])  # not a permutation
    with pytest.raises(InvalidDiagram):
        diagram([(0, "D"), (1, "U"), (2, "D"), (3, "U")], [2, 3, 0, 1])  # 2-cycles
    with pytest.raises(NotRealizable):
        # single cycle whose arcs are forced to cross in the strip
        diagram([(0, "U"), (0, "D"), (1, "U"), (1, "D")], [2, 3, 1, 0])


def test_winding_values():
    assert winding(standard_circle(4)) in (-1, 1)
    circ = canonicalize(diagram([(2, "D"), (3, "U")], [1, 0]))
    assert winding(circ) == 0


def test_translate_shifts_gaps():
    s0 = standard_circle(0)
    assert translate(s0, 5) == standard_circle(5)
    tau = canonicalize(diagram([(0, "U"), (2, "D"), (3, "U")], [2, 0, 1]))
    assert translate(translate(tau, -1), 1) == tau


def test_canonicalize_idempotent_on_random_reduced_forms():
    rng = random.Random(11)
    from curvelab.flute import LassoArc, lasso

    d = standard_circle(0)
    for _ in range(12):
        p = rng.randint(-3, 4)
        side = rng.choice(["above", "below"])
        d = lasso(d, LassoArc(p, side=side))
        assert canonicalize(d) == d


def test_json_round_trip():
    tau = canonicalize(diagram([(0, "U"), (2, "D"), (3, "U")], [2, 0, 1]))
    again = canonicalize(diagram_from_json(diagram_to_json(tau)))
    assert again == tau
    with pytest.raises(InvalidDiagram):
        diagram_from_json('{"crossings": [], "succ": []}')
    with pytest.raises(InvalidDiagram):
        diagram_from_json("[1,2,3]")
