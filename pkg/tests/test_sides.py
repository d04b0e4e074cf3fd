import random

from curvelab.sides import SideAssignment, threshold_set


def test_threshold_normalization():
    # holes above the threshold push it up; members just below pull it down
    a = SideAssignment(0, frozenset({5}))
    assert a.threshold == 6
    assert a.flips == frozenset({0, 1, 2, 3, 4})
    b = SideAssignment(3, frozenset({2}))
    assert b.threshold == 2
    assert b.flips == frozenset()


def test_membership_and_counts():
    a = SideAssignment(4, frozenset({1, 2}))  # {1,2} u {4,5,...}
    assert 1 in a and 2 in a and 4 in a and 100 in a
    assert 0 not in a and 3 not in a
    assert a.count_members_below(4) == 2
    assert a.count_members_below(10) == 8
    assert a.members_below(3) == frozenset({1, 2})
    assert a.count_nonmembers_from(0) == 2  # 0 and 3
    assert a.count_nonmembers_from(2) == 1
    assert a.count_nonmembers_from(7) == 0


def test_symmetric_difference_matches_bruteforce():
    rng = random.Random(7)
    for _ in range(200):
        t1, t2 = rng.randint(-4, 4), rng.randint(-4, 4)
        f1 = frozenset(rng.sample(range(-6, 8), rng.randint(0, 5)))
        f2 = frozenset(rng.sample(range(-6, 8), rng.randint(0, 5)))
        a, b = SideAssignment(t1, f1), SideAssignment(t2, f2)
        brute = {n for n in range(-20, 20) if (n in a) != (n in b)}
        assert a.symmetric_difference(b) == frozenset(brute)
        assert a.hamming(b) == len(brute)
        assert a.issubset(b) == all(n in b for n in range(-20, 20) if n in a)


def test_shift_and_toggle():
    a = threshold_set(1)
    assert a.shift(3) == threshold_set(4)
    b = a.toggle([3])
    assert 3 not in b and 2 in b and 4 in b
    assert b.toggle([3]) == a


def test_bitmask():
    a = SideAssignment(4, frozenset({1, 2}))
    b = threshold_set(1)
    lo, hi = -2, 8
    xor = a.bitmask_below(lo, hi) ^ b.bitmask_below(lo, hi)
    assert bin(xor).count("1") == a.hamming(b)
