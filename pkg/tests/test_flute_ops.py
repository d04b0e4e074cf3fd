import random

import pytest

from curvelab.errors import ArcDisjoint, NotDisjoint, NotSeparating
from curvelab.flute import (
    ABOVE,
    BELOW,
    Carrier,
    LassoArc,
    are_neighbors,
    canonicalize,
    diagram,
    disjointly_realizable,
    enumerate_neighbors,
    forget_puncture,
    geometry_oracle,
    is_separating,
    joint_carrier,
    lasso,
    puncture_partition,
    punctures_between,
    realize,
    standard_circle,
    translate,
)
from curvelab.sides import threshold_set

S = standard_circle


def tau():
    """The lasso of the standard circle at 0 catching puncture 3."""
    return lasso(S(0), LassoArc(3))


def random_curve(rng, span=4, steps=3, winding=0):
    """A random iterated-lasso curve; with winding > 0 some arcs wind."""
    d = S(rng.randint(-2, 2))
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


# -- separation and sides ---------------------------------------------------


def test_is_separating_examples():
    assert is_separating(S(5))
    circle_around_3 = canonicalize(diagram([(2, "D"), (3, "U")], [1, 0]))
    assert not is_separating(circle_around_3)
    assert is_separating(tau())


def test_puncture_partition_examples():
    assert puncture_partition(S(0)) == threshold_set(1)
    assert puncture_partition(tau()) == threshold_set(1).toggle([3])
    # lasso of the puncture adjacent on the left collapses to a circle
    left = lasso(S(0), LassoArc(0))
    assert puncture_partition(left) == threshold_set(0)
    assert left == S(-1)


def test_partition_requires_separating():
    circle = canonicalize(diagram([(2, "D"), (3, "U")], [1, 0]))
    with pytest.raises(NotSeparating):
        puncture_partition(circle)


# -- forgetting a puncture ---------------------------------------------------


def test_forget_left_of_curve_is_identity_up_to_shift():
    assert forget_puncture(S(0), 3) == S(0)
    assert forget_puncture(S(1), 0) == S(0)


def test_forget_collapses_lassoed_puncture():
    assert forget_puncture(tau(), 3) == S(0)


def test_forget_on_random_curves_matches_partition():
    rng = random.Random(5)
    for _ in range(60):
        d = random_curve(rng, winding=1)
        n = rng.randint(-5, 5)
        img = forget_puncture(d, n)
        p, q = puncture_partition(d), puncture_partition(img)
        expect = {m if m < n else m - 1 for m in p.members_below(9) if m != n}
        assert {m for m in q.members_below(8)} == expect


# -- lassoing -----------------------------------------------------------------


def test_lasso_flips_exactly_the_target():
    rng = random.Random(9)
    for _ in range(60):
        d = random_curve(rng, winding=1)
        p = rng.randint(-5, 5)
        side = rng.choice([ABOVE, BELOW])
        nb = lasso(d, LassoArc(p, side=side))
        assert puncture_partition(nb) == puncture_partition(d).toggle([p])
        assert punctures_between(d, nb) == frozenset({p})
        assert are_neighbors(d, nb)


def test_lasso_examples():
    assert lasso(S(0), LassoArc(0)) == S(-1)
    assert lasso(S(0), LassoArc(0, side=BELOW)) == S(-1)
    assert lasso(S(0), LassoArc(1)) == S(1)
    assert puncture_partition(lasso(S(0), LassoArc(3))) == threshold_set(1).toggle([3])


def test_winding_lasso_same_partition_different_curve():
    tp = lasso(S(0), LassoArc(1, ((2, "D"), (1, "U")), ABOVE))
    assert puncture_partition(tp) == puncture_partition(S(1))
    assert tp != S(1)
    # equal partitions of distinct curves can never be drawn disjointly
    assert not disjointly_realizable(tp, S(1))


def test_translate_commutes_with_partition():
    rng = random.Random(13)
    for _ in range(40):
        d = random_curve(rng, winding=1)
        k = rng.randint(-4, 4)
        assert puncture_partition(translate(d, k)) == puncture_partition(d).shift(k)


def test_translate_is_lasso_equivariant():
    rng = random.Random(17)
    for _ in range(30):
        d = random_curve(rng)
        p = rng.randint(-4, 4)
        k = rng.randint(-3, 3)
        side = rng.choice([ABOVE, BELOW])
        assert translate(lasso(d, LassoArc(p, side=side)), k) == lasso(
            translate(d, k), LassoArc(p + k, side=side)
        )


# -- subsurfaces between curves ----------------------------------------------


def test_punctures_between_examples():
    assert punctures_between(S(0), S(5)) == frozenset({1, 2, 3, 4, 5})
    assert punctures_between(S(0), tau()) == frozenset({3})
    assert punctures_between(S(0), S(0)) == frozenset()


def test_incomparable_pair_not_disjoint():
    a = lasso(S(0), LassoArc(3))  # right side loses 3
    b = lasso(S(0), LassoArc(1))  # right side loses 1
    assert not disjointly_realizable(a, b)
    with pytest.raises(NotDisjoint):
        punctures_between(a, b)


def test_neighbors_have_one_puncture_between():
    rng = random.Random(23)
    for _ in range(40):
        d = random_curve(rng)
        p = rng.randint(-4, 4)
        nb = lasso(d, LassoArc(p, side=rng.choice([ABOVE, BELOW])))
        assert len(punctures_between(d, nb)) == 1


# -- carriers and enumeration --------------------------------------------------


def test_carrier_semantics():
    c = Carrier(-1, 2)
    assert list(c.punctures()) == [-1, 0, 1, 2]
    assert c.carries(S(0))
    assert not c.carries(tau())  # tau reaches into gap 3
    assert Carrier(-1, 3).carries(tau())
    assert not c.carries(S(4))
    j = joint_carrier(S(0), S(3))
    assert j.carries(S(0)) and j.carries(S(3))


def test_enumerate_neighbors_straight_arcs():
    out = enumerate_neighbors(S(0), Carrier(-1, 2), 0)
    keys = {d.key() for d in out}
    assert S(-1).key() in keys and S(1).key() in keys
    # targets adjacent to the circle collapse for both approach sides;
    # the far targets -1 and 2 yield two distinct curves each
    assert len(out) == 6
    for nb in out:
        assert len(punctures_between(S(0), nb)) == 1
        sep, part = geometry_oracle(realize(nb))
        assert sep and part == puncture_partition(nb)


def test_enumerate_monotone_in_winding_bound():
    base = {d.key() for d in enumerate_neighbors(S(0), Carrier(-1, 2), 0)}
    more = {d.key() for d in enumerate_neighbors(S(0), Carrier(-1, 2), 1)}
    assert base <= more
    assert len(more) > len(base)


def test_enumerate_every_output_is_neighbor():
    out = enumerate_neighbors(tau(), Carrier(-1, 4), 1)
    t = tau()
    for nb in out:
        assert len(punctures_between(t, nb)) == 1
