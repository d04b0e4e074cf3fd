"""Operations on flute curves: sides, lassos, neighbors, disjointness.

The drawing model behind the lasso construction: realize a canonical
diagram with one rational x-position per crossing, cut the cylinder along
the reference line L into a strip, and view the curve as a non-crossing
chord system in a disk whose boundary consists of the strip's two edges
plus the two ends at infinity.  The faces of that chord system are exactly
the regions a lasso arc can travel through; an arc is specified by its
target puncture, its crossing trace with L, and the side (above or below
L) from which it finally approaches the puncture.

Routing is deterministic: each requested crossing uses the leftmost
feasible sub-interval of the current face's boundary in the requested gap,
and the arc finally attaches to the curve strand at the counterclockwise
end of the boundary interval it stands on.  The lasso curve is then built
by band surgery: the curve's own crossings survive unchanged, each trace
crossing contributes a parallel pair, and wrapping the puncture adds one
crossing on either side of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..errors import (
    ArcDisjoint,
    InvalidDiagram,
    NotDisjoint,
    NotSeparating,
    SearchBudgetExceeded,
)
from ..sides import SideAssignment
from .diagram import (
    DOWN,
    UP,
    CrossingDiagram,
    _FLIP,
    canonicalize,
    diagram,
    validate_diagram,
    winding,
)

ABOVE = "above"
BELOW = "below"


def is_separating(d: CrossingDiagram) -> bool:
    """True iff the curve separates the two maximal ends (winding +-1)."""
    return abs(winding(d)) == 1


def puncture_partition(d: CrossingDiagram) -> SideAssignment:
    """The set of punctures on the right (e_+) side of a separating curve.

    Puncture n lies right of the curve iff the ray along L from n to +oo
    meets the curve an even number of times, i.e. iff the number of
    crossings in gaps >= n is even.
    """
    if not d.canonical:
        d = canonicalize(d)
    if not is_separating(d):
        raise NotSeparating("puncture partition requires a separating curve")
    gaps = d.gaps()
    lo, hi = gaps[0], gaps[-1]
    members = set()
    for n in range(lo, hi + 1):
        right_count = sum(1 for g in gaps if g >= n)
        if right_count % 2 == 0:
            members.add(n)
    return SideAssignment(hi + 1, frozenset(members))


def forget_puncture(d: CrossingDiagram, n: int) -> CrossingDiagram:
    """Erase the puncture at n and re-index larger punctures down by one.

    Realized by the left-contraction homeomorphism: identity left of n-1,
    horizontal contraction of [n-1, n+1], unit left shift beyond.  On gaps
    this merges gaps n-1 and n (order of crossings preserved) and shifts
    larger gaps down.
    """
    if not d.canonical:
        d = canonicalize(d)
    new_cr = tuple((g if g <= n - 1 else g - 1, dr) for g, dr in d.crossings)
    return canonicalize(CrossingDiagram(new_cr, d.succ))


@dataclass(frozen=True)
class Carrier:
    """Copy interval [lo, hi]: the subsurface between the standard circles
    of copies lo-1 and hi.  It contains punctures lo..hi and can absorb any
    curve whose crossings live in gaps lo-1 .. hi."""

    lo: int
    hi: int

    def punctures(self) -> range:
        return range(self.lo, self.hi + 1)

    def gap_range(self) -> Tuple[int, int]:
        return (self.lo - 1, self.hi)

    def carries(self, d: CrossingDiagram) -> bool:
        return all(self.lo - 1 <= g <= self.hi for g in d.gaps())

    def contains_puncture(self, p: int) -> bool:
        return self.lo <= p <= self.hi


def joint_carrier(*diagrams: CrossingDiagram) -> Carrier:
    gaps = [g for d in diagrams for g in d.gaps()]
    return Carrier(min(gaps), max(gaps) + 1)


@dataclass(frozen=True)
class LassoArc:
    """An embedded arc from a curve to a puncture, up to isotopy.

    ``trace`` lists the (gap, direction) crossings the arc makes with L in
    travel order from the curve to the puncture; ``side`` says whether the
    arc finally approaches the puncture from above or below L.  The
    constructed arc always meets its curve exactly once, at the attachment
    point.  ``anchor`` optionally names canonical keys of further curves a
    multi-curve construction routes this arc across (one crossing each).
    """

    target: int
    trace: Tuple[Tuple[int, str], ...] = ()
    side: str = ABOVE
    anchor: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.side not in (ABOVE, BELOW):
            raise ArcDisjoint(f"side must be {ABOVE!r} or {BELOW!r}")
        for g, dr in self.trace:
            if dr not in (UP, DOWN):
                raise ArcDisjoint(f"bad trace direction {dr!r}")


# ---------------------------------------------------------------------------
# Strip arrangement


class _Arrangement:
    """Faces of the cut-open strip determined by one realized diagram."""

    def __init__(self, d: CrossingDiagram):
        self.d = d
        m = d.size
        self.m = m
        counts: Dict[int, int] = {}
        for g, _ in d.crossings:
            counts[g] = counts.get(g, 0) + 1
        seen: Dict[int, int] = {}
        xs: List[Fraction] = []
        for g, _ in d.crossings:
            r = seen.get(g, 0)
            seen[g] = r + 1
            xs.append(g + Fraction(r + 1, counts[g] + 1))
        self.xs = xs

        # arc i runs from the outgoing end of crossing i to the incoming
        # end of crossing succ[i]; record both as circle positions
        self.out_pos: List[int] = []
        self.in_pos: List[int] = []
        for i in range(m):
            j = d.succ[i]
            self.out_pos.append(i if d.crossings[i][1] == UP else 2 * m - 1 - i)
            self.in_pos.append(2 * m - 1 - j if d.crossings[j][1] == UP else j)
        self.node_arc: Dict[int, int] = {}
        for i in range(m):
            self.node_arc[self.out_pos[i]] = i
            self.node_arc[self.in_pos[i]] = i
        self.chords = [
            (min(self.out_pos[i], self.in_pos[i]), max(self.out_pos[i], self.in_pos[i]))
            for i in range(m)
        ]
        self.sig = [
            frozenset(i for i, (u, v) in enumerate(self.chords) if u <= a < v)
            for a in range(2 * m)
        ]

    # -- interval geometry ------------------------------------------------

    def interval_of(self, edge: str, x: Fraction) -> int:
        m, xs = self.m, self.xs
        if x < xs[0]:
            return 2 * m - 1
        if x > xs[-1]:
            return m - 1
        i = max(k for k in range(m) if xs[k] < x)
        if edge == "b":
            return i
        return 2 * m - 2 - i

    def interval_pieces(self, a: int):
        """Edge pieces (edge, lo, hi) covered by boundary interval a; an
        endpoint of None means the piece runs to infinity."""
        m, xs = self.m, self.xs
        if a < m - 1:
            return [("b", xs[a], xs[a + 1])]
        if a == m - 1:
            return [("b", xs[m - 1], None), ("t", xs[m - 1], None)]
        if a < 2 * m - 1:
            i = 2 * m - 2 - a
            return [("t", xs[i], xs[i + 1])]
        return [("t", None, xs[0]), ("b", None, xs[0])]

    def circle_pos(self, edge: str, x: Fraction) -> Fraction:
        """Monotone counterclockwise coordinate in [0, 2m) of an edge point."""
        m, xs = self.m, self.xs
        a = self.interval_of(edge, x)
        if a < m - 1:
            return a + (x - xs[a]) / (xs[a + 1] - xs[a])
        if a == m - 1:
            t = x - xs[m - 1]
            if edge == "b":
                return a + Fraction(1, 2) * t / (1 + t)
            return a + Fraction(1, 2) + Fraction(1, 2) / (1 + t)
        if a < 2 * m - 1:
            i = 2 * m - 2 - a
            return a + (xs[i + 1] - x) / (xs[i + 1] - xs[i])
        t = xs[0] - x
        if edge == "t":
            return a + Fraction(1, 2) * t / (1 + t)
        return a + Fraction(1, 2) + Fraction(1, 2) / (1 + t)


def _in_arc(z, a, b) -> bool:
    """True iff z lies strictly inside the counterclockwise arc from a to b."""
    if a < b:
        return a < z < b
    return z > a or z < b


# ---------------------------------------------------------------------------
# Arc routing


class _Route:
    def __init__(self, land_xs, attach_arc, sign, attach_entry_q):
        self.land_xs = land_xs  # per trace index, curve->puncture order
        self.attach_arc = attach_arc
        self.sign = sign  # +1: arc leaves the attach strand on its left


def _route_arc(arr: _Arrangement, arc: LassoArc) -> _Route:
    """Walk the arc backwards from the puncture and fix all crossing
    positions; raises ArcDisjoint when the trace cannot be realized."""
    p = arc.target
    edge = "b" if arc.side == ABOVE else "t"
    x = Fraction(p)
    interval = arr.interval_of(edge, x)
    face = arr.sig[interval]
    q_here = arr.circle_pos(edge, x)
    transits: Dict[FrozenSet[int], List[Tuple[Fraction, Fraction]]] = {}
    used_xs = set(arr.xs)
    land_xs: List[Optional[Fraction]] = [None] * len(arc.trace)

    for r in range(len(arc.trace) - 1, -1, -1):
        gap, fwd_dir = arc.trace[r]
        travel = _FLIP[fwd_dir]  # walking puncture -> curve
        exit_edge = "t" if travel == UP else "b"
        land_edge = "b" if travel == UP else "t"
        glo, ghi = Fraction(gap), Fraction(gap + 1)
        ranges = []
        for a in range(2 * arr.m):
            if arr.sig[a] != face:
                continue
            for e, lo, hi in arr.interval_pieces(a):
                if e != exit_edge:
                    continue
                lo2 = glo if lo is None else max(lo, glo)
                hi2 = ghi if hi is None else min(hi, ghi)
                if lo2 < hi2:
                    ranges.append((lo2, hi2))
        if not ranges:
            raise ArcDisjoint(
                f"trace step {r} cannot cross gap {gap} from the current region"
            )
        # refine by landing subdivision so the landing face is constant
        cuts = sorted({c for c in arr.xs if glo < c < ghi})
        refined = []
        for lo2, hi2 in ranges:
            pts = [lo2] + [c for c in cuts if lo2 < c < hi2] + [hi2]
            refined.extend(zip(pts, pts[1:]))
        lo2, hi2 = min(refined)
        xr = (lo2 + hi2) / 2
        while xr in used_xs:
            xr = (lo2 + xr) / 2
        used_xs.add(xr)
        land_xs[r] = xr
        q_exit = arr.circle_pos(exit_edge, xr)
        _record_transit(transits, face, q_here, q_exit)
        edge, x = land_edge, xr
        interval = arr.interval_of(edge, x)
        face = arr.sig[interval]
        q_here = arr.circle_pos(edge, x)

    # attach to the strand first met travelling along the current edge
    # (the corridor drawing); intervals with both ends on this edge take
    # the counterclockwise end
    m = arr.m
    if interval == m - 1:
        end_node = m - 1 if edge == "b" else m
    elif interval == 2 * m - 1:
        end_node = 0 if edge == "b" else 2 * m - 1
    else:
        end_node = (interval + 1) % (2 * m)
    attach_arc = arr.node_arc[end_node]
    p_out = arr.out_pos[attach_arc]
    p_in = arr.in_pos[attach_arc]
    for (r1, r2) in transits.get(face, []):
        side_q = _in_arc(q_here, r1, r2)
        if side_q != _in_arc(Fraction(p_out), r1, r2):
            raise ArcDisjoint("arc cannot reach the curve without self-crossing")
    sign = 1 if _in_arc(q_here, Fraction(p_in), Fraction(p_out)) else -1
    return _Route(land_xs, attach_arc, sign, q_here)


def _record_transit(transits, face, q1, q2) -> None:
    for (r1, r2) in transits.get(face, []):
        if _in_arc(r1, q1, q2) != _in_arc(r2, q1, q2):
            raise ArcDisjoint("arc trace forces a self-crossing")
    transits.setdefault(face, []).append((q1, q2))


# ---------------------------------------------------------------------------
# Lasso surgery


def lasso(d: CrossingDiagram, arc: LassoArc) -> CrossingDiagram:
    """The lasso curve: follow the curve and pull the arc's puncture across.

    The result is separating, disjoint from the input, and the subsurface
    between them is an annulus with the single puncture ``arc.target``; in
    particular the two curves are neighbors in the translatable curve
    graph and the right-side puncture set toggles exactly at the target.
    """
    if not d.canonical:
        d = canonicalize(d)
    if not is_separating(d):
        raise NotSeparating("lasso requires a separating curve")
    arr = _Arrangement(d)
    route = _route_arc(arr, arc)
    p = arc.target
    k = len(arc.trace)

    all_xs = sorted(set(arr.xs) | {x for x in route.land_xs} | {Fraction(p)})
    diffs = [b - a for a, b in zip(all_xs, all_xs[1:])]
    delta = min(diffs + [Fraction(1)]) / 4

    sgn = route.sign
    entries: List[Tuple[Fraction, int, str, Tuple]] = []
    for i in range(d.size):
        g, dr = d.crossings[i]
        entries.append((arr.xs[i], g, dr, ("o", i)))

    order: List[Tuple] = []  # detour uids in traversal order
    for r in range(k):  # side 1: attach -> puncture
        g, e = arc.trace[r]
        off = sgn * (-delta if e == UP else delta)
        entries.append((route.land_xs[r] + off, g, e, ("s1", r)))
        order.append(("s1", r))
    if arc.side == ABOVE:
        wrap = [(Fraction(p) + sgn * delta, DOWN), (Fraction(p) - sgn * delta, UP)]
    else:
        wrap = [(Fraction(p) - sgn * delta, UP), (Fraction(p) + sgn * delta, DOWN)]
    for t, (wx, wdir) in enumerate(wrap):
        entries.append((wx, p - 1 if wx < p else p, wdir, ("w", t)))
        order.append(("w", t))
    for r in range(k - 1, -1, -1):  # side 2: puncture -> attach
        g, e = arc.trace[r]
        off = sgn * (-delta if e == UP else delta)
        entries.append((route.land_xs[r] - off, g, _FLIP[e], ("s2", r)))
        order.append(("s2", r))

    succ_uid: Dict[Tuple, Tuple] = {}
    for i in range(d.size):
        succ_uid[("o", i)] = ("o", d.succ[i])
    ia = route.attach_arc
    chain = [("o", ia)] + order + [("o", d.succ[ia])]
    for u, v in zip(chain, chain[1:]):
        succ_uid[u] = v

    entries.sort(key=lambda e: e[0])
    index = {uid: i for i, (_, _, _, uid) in enumerate(entries)}
    crossings = tuple((g, dr) for _, g, dr, _ in entries)
    succ = tuple(index[succ_uid[uid]] for _, _, _, uid in entries)
    out = CrossingDiagram(crossings, succ)
    validate_diagram(out)  # construction self-check
    return canonicalize(out)


# ---------------------------------------------------------------------------
# Disjointness and subsurfaces


_SHUFFLE_BUDGET = 200_000


def disjointly_realizable(a: CrossingDiagram, b: CrossingDiagram) -> bool:
    """Decide whether the two isotopy classes admit disjoint representatives.

    Both curves may be bigon-reduced while staying disjoint, so it suffices
    to interleave the two canonical diagrams gap by gap and look for a
    placement whose combined chord system is non-crossing.  Incomparable or
    equal right-side puncture sets of distinct separating curves force an
    intersection (nesting, and the empty-annulus argument, respectively).
    """
    a, b = canonicalize(a), canonicalize(b)
    if a == b:
        return True
    if is_separating(a) and is_separating(b):
        pa, pb = puncture_partition(a), puncture_partition(b)
        if pa == pb:
            return False
        if not (pa.issubset(pb) or pb.issubset(pa)):
            return False
    return _merged_planar(a, b)


def _merged_planar(a: CrossingDiagram, b: CrossingDiagram) -> bool:
    """Search interleavings of the two crossing lists for a placement whose
    combined chord system is non-crossing.

    Depth-first merge of the two (gap-sorted) crossing sequences; a branch
    only arises when both heads sit in the same gap.  A chord becomes final
    as soon as both of its crossings are placed (later crossings land right
    of all placed bottom points and left of all placed top points), so each
    placement is checked against the other curve's finished chords and bad
    branches die early.
    """
    ma, mb = a.size, b.size
    total = ma + mb
    budget = [_SHUFFLE_BUDGET]

    # chord mates: crossing i is linked to succ[i] and to pred[i]
    def mates(d):
        pred = [0] * d.size
        for i, j in enumerate(d.succ):
            pred[j] = i
        return pred

    pred_a, pred_b = mates(a), mates(b)

    def endpoint(d, pos, i, outgoing):
        if outgoing:
            return pos[i] if d.crossings[i][1] == UP else 2 * total - 1 - pos[i]
        return 2 * total - 1 - pos[i] if d.crossings[i][1] == UP else pos[i]

    pos_a, pos_b = [-1] * ma, [-1] * mb
    closed_a: List[Tuple[int, int]] = []
    closed_b: List[Tuple[int, int]] = []

    def close_chords(d, pos, pred, i, own_closed, other_closed) -> Optional[int]:
        added = 0
        for j, outgoing in ((d.succ[i], True), (pred[i], False)):
            if pos[j] < 0 or (j == i and not outgoing):
                continue
            if outgoing:
                p1, p2 = endpoint(d, pos, i, True), endpoint(d, pos, j, False)
            else:
                p1, p2 = endpoint(d, pos, j, True), endpoint(d, pos, i, False)
            lo, hi = min(p1, p2), max(p1, p2)
            for (lo2, hi2) in other_closed:
                if (lo < lo2 < hi < hi2) or (lo2 < lo < hi2 < hi):
                    for _ in range(added):
                        own_closed.pop()
                    return None
            own_closed.append((lo, hi))
            added += 1
        return added

    def dfs(ia: int, ib: int, placed: int) -> bool:
        if budget[0] <= 0:
            raise SearchBudgetExceeded("disjointness search budget exhausted")
        budget[0] -= 1
        if placed == total:
            return True
        options = []
        ga = a.crossings[ia][0] if ia < ma else None
        gb = b.crossings[ib][0] if ib < mb else None
        if ga is not None and (gb is None or ga <= gb):
            options.append("a")
        if gb is not None and (ga is None or gb <= ga):
            options.append("b")
        for choice in options:
            if choice == "a":
                pos_a[ia] = placed
                added = close_chords(a, pos_a, pred_a, ia, closed_a, closed_b)
                if added is not None and dfs(ia + 1, ib, placed + 1):
                    return True
                for _ in range(added or 0):
                    closed_a.pop()
                pos_a[ia] = -1
            else:
                pos_b[ib] = placed
                added = close_chords(b, pos_b, pred_b, ib, closed_b, closed_a)
                if added is not None and dfs(ia, ib + 1, placed + 1):
                    return True
                for _ in range(added or 0):
                    closed_b.pop()
                pos_b[ib] = -1
        return False

    return dfs(0, 0, 0)


def punctures_between(a: CrossingDiagram, b: CrossingDiagram) -> FrozenSet[int]:
    """Punctures of the subsurface bounded by two disjoint separating curves.

    Equals the symmetric difference of the right-side puncture sets.
    """
    a, b = canonicalize(a), canonicalize(b)
    if not (is_separating(a) and is_separating(b)):
        raise NotSeparating("both curves must be separating")
    if not disjointly_realizable(a, b):
        raise NotDisjoint("the curves admit no disjoint representatives")
    return puncture_partition(a).symmetric_difference(puncture_partition(b))


def are_neighbors(a: CrossingDiagram, b: CrossingDiagram) -> bool:
    """Edge test: disjoint and exactly one puncture between."""
    try:
        return len(punctures_between(a, b)) == 1
    except NotDisjoint:
        return False


# ---------------------------------------------------------------------------
# Neighbor enumeration


def enumerate_neighbors(
    d: CrossingDiagram, carrier: Carrier, winding_bound: int
) -> List[CrossingDiagram]:
    """All lasso curves with target in the carrier and trace length bounded.

    Deterministic: outputs deduplicated by canonical form and sorted by
    key.  Every output is a neighbor of ``d`` in the translatable curve
    graph (an annulus with one puncture between); the enumeration is a
    finite truncation of the uncountable true neighborhood.
    """
    if not d.canonical:
        d = canonicalize(d)
    if not carrier.carries(d):
        raise InvalidDiagram("carrier does not carry the curve")
    glo, ghi = carrier.gap_range()
    gap_dirs = [(g, dr) for g in range(glo, ghi + 1) for dr in (UP, DOWN)]
    out: Dict[str, CrossingDiagram] = {}
    for p in carrier.punctures():
        for length in range(winding_bound + 1):
            for trace in itertools.product(gap_dirs, repeat=length):
                for side in (ABOVE, BELOW):
                    try:
                        nb = lasso(d, LassoArc(p, tuple(trace), side))
                    except ArcDisjoint:
                        continue
                    out.setdefault(nb.key(), nb)
    return [out[k] for k in sorted(out)]
