import random
from fractions import Fraction

import pytest

from curvelab.errors import Degenerate
from curvelab.flute import (
    ABOVE,
    BELOW,
    LassoArc,
    canonicalize,
    diagram,
    geometry_oracle,
    lasso,
    puncture_partition,
    realize,
    standard_circle,
)
from curvelab.flute.geometry import PolylineCurve
from curvelab.sides import threshold_set


def test_realize_standard_circle():
    curve = realize(standard_circle(0))
    sep, part = geometry_oracle(curve)
    assert sep and part == threshold_set(1)


def test_oracle_on_non_separating_circle():
    circle = canonicalize(diagram([(2, "D"), (3, "U")], [1, 0]))
    sep, part = geometry_oracle(realize(circle))
    assert not sep and part is None


def test_oracle_on_lasso_curve():
    tau = lasso(standard_circle(0), LassoArc(3))
    sep, part = geometry_oracle(realize(tau))
    assert sep and part == threshold_set(1).toggle([3])


def test_oracle_matches_partition_on_random_curves():
    """The ray-casting oracle and the crossing-parity partition are
    independent computations; they must agree on every sampled curve."""
    rng = random.Random(31)
    from tests_common import random_curve

    for _ in range(80):
        d = random_curve(rng, winding=1)
        sep, part = geometry_oracle(realize(d))
        assert sep
        assert part == puncture_partition(d)


def test_degenerate_inputs_rejected():
    # vertex at a puncture
    bad = PolylineCurve(
        (
            (
                (Fraction(1), Fraction(0)),
                (Fraction(1), Fraction(1, 2)),
                (Fraction(1), Fraction(1)),
            ),
        )
    )
    with pytest.raises(Degenerate):
        from curvelab.flute.geometry import _validate

        _validate(bad)


def test_self_intersection_detected():
    crossing_pair = PolylineCurve(
        (
            (
                (Fraction(1, 2), Fraction(0)),
                (Fraction(5, 2), Fraction(1, 2)),
                (Fraction(1, 2), Fraction(1)),
            ),
            (
                (Fraction(3, 2), Fraction(0)),
                (Fraction(3, 2), Fraction(1)),
            ),
        )
    )
    with pytest.raises(Degenerate):
        from curvelab.flute.geometry import _validate

        _validate(crossing_pair)
