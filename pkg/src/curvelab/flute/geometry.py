"""Exact-rational polyline realizations: the independent geometry oracle.

A canonical diagram is drawn in the cut-open strip with axis-parallel
polylines: bottom-to-bottom arcs become low arches, top-to-top arcs become
high hangs, and through-arcs cross the middle zone at pairwise distinct
heights.  All coordinates are rationals, so point-versus-curve questions
reduce to exact segment arithmetic.  The oracle answers the two questions
tests care about, by ray casting rather than by any diagram combinatorics:
is the curve separating, and which punctures lie on its right side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import Degenerate, InvalidDiagram
from ..sides import SideAssignment
from .diagram import UP, CrossingDiagram, canonicalize

Point = Tuple[Fraction, Fraction]
Segment = Tuple[Point, Point]


@dataclass(frozen=True)
class PolylineCurve:
    """A closed curve on the cylinder, cut into strands at the seam.

    Each strand is a polyline from one seam touchpoint to the next; interior
    vertices have 0 < y < 1 and endpoint vertices sit on the seam (y = 0 or
    y = 1) away from every puncture.
    """

    strands: Tuple[Tuple[Point, ...], ...]

    def segments(self) -> List[Segment]:
        segs = []
        for strand in self.strands:
            segs.extend(zip(strand, strand[1:]))
        return segs

    def vertices(self) -> List[Point]:
        return [pt for strand in self.strands for pt in strand]


def realize(d: CrossingDiagram) -> PolylineCurve:
    """Draw a canonical diagram as disjoint axis-parallel strands."""
    if not d.canonical:
        d = canonicalize(d)
    m = d.size
    counts = {}
    for g, _ in d.crossings:
        counts[g] = counts.get(g, 0) + 1
    seen = {}
    xs = []
    for g, _ in d.crossings:
        r = seen.get(g, 0)
        seen[g] = r + 1
        xs.append(Fraction(g) + Fraction(r + 1, counts[g] + 1))

    # strand i runs from the outgoing end of crossing i (bottom for U, top
    # for D) to the incoming end of crossing succ[i]
    kinds = []
    for i in range(m):
        j = d.succ[i]
        e1 = "b" if d.crossings[i][1] == UP else "t"
        e2 = "t" if d.crossings[j][1] == UP else "b"
        kinds.append((e1, e2, xs[i], xs[j]))

    bt = {
        i for i, (e1, e2, _, _) in enumerate(kinds) if {e1, e2} == {"b", "t"}
    }

    def nesting_depth(i: int, same_kind: Sequence[int]) -> int:
        lo, hi = sorted((kinds[i][2], kinds[i][3]))
        depth = 0
        for j in same_kind:
            if j == i:
                continue
            lo2, hi2 = sorted((kinds[j][2], kinds[j][3]))
            if lo2 < lo and hi < hi2:
                depth += 1
        return depth

    bb = [i for i, (e1, e2, _, _) in enumerate(kinds) if e1 == e2 == "b"]
    tt = [i for i, (e1, e2, _, _) in enumerate(kinds) if e1 == e2 == "t"]

    strands: List[Tuple[Point, ...]] = []
    for i in range(m):
        e1, e2, xa, xb = kinds[i]
        if i in bt:
            # through-strand: steep risers clear the arch zones, and the
            # diagonals never cross because through-chords have bottom and
            # top endpoints in the same left-to-right order
            xbot, xtop = (xa, xb) if e1 == "b" else (xb, xa)
            lo, hi = Fraction(1, 4), Fraction(3, 4)
            pts = ((xbot, Fraction(0)), (xbot, lo), (xtop, hi), (xtop, Fraction(1)))
            if e1 == "t":
                pts = tuple(reversed(pts))
        elif e1 == "b":
            h = Fraction(1, 4 * (nesting_depth(i, bb) + 2))
            pts = ((xa, Fraction(0)), (xa, h), (xb, h), (xb, Fraction(0)))
        else:
            h = 1 - Fraction(1, 4 * (nesting_depth(i, tt) + 2))
            pts = ((xa, Fraction(1)), (xa, h), (xb, h), (xb, Fraction(1)))
        strands.append(pts)
    curve = PolylineCurve(tuple(strands))
    _validate(curve)
    return curve


def _validate(curve: PolylineCurve) -> None:
    for strand in curve.strands:
        for k, (x, y) in enumerate(strand):
            on_seam = y == 0 or y == 1
            if on_seam and 0 < k < len(strand) - 1:
                raise Degenerate("interior vertex on the reference line")
            if not on_seam and (k == 0 or k == len(strand) - 1):
                raise Degenerate("strand endpoint off the reference line")
            if on_seam and x.denominator == 1:
                raise Degenerate("vertex at a puncture")
    segs = curve.segments()
    strand_of = []
    for si, strand in enumerate(curve.strands):
        strand_of.extend([(si, k)] * 1 for k in range(len(strand) - 1))
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            si, ki = strand_of[i][0]
            sj, kj = strand_of[j][0]
            adjacent = si == sj and abs(ki - kj) == 1
            if _segments_touch(segs[i], segs[j], allow_shared_endpoint=adjacent):
                raise Degenerate("polyline self-intersects")


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if _orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def _segments_touch(s: Segment, t: Segment, allow_shared_endpoint: bool) -> bool:
    a, b = s
    c, d = t
    shared = {a, b} & {c, d}
    if shared and allow_shared_endpoint and len(shared) == 1:
        # ignore the designed shared vertex; any further contact is real
        o1, o2 = _orient(a, b, c), _orient(a, b, d)
        o3, o4 = _orient(c, d, a), _orient(c, d, b)
        if o1 == o2 == 0:  # collinear overlap test
            pts = sorted({a, b, c, d})
            return _on_segment(a, b, c) and _on_segment(a, b, d) or (
                _on_segment(c, d, a) and _on_segment(c, d, b)
            ) or len(pts) < 3
        return False
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    for (u, v, p) in ((a, b, c), (a, b, d), (c, d, a), (c, d, b)):
        if _on_segment(u, v, p):
            return True
    return False


def geometry_oracle(
    curve: PolylineCurve, window: Optional[Tuple[int, int]] = None
) -> Tuple[bool, Optional[SideAssignment]]:
    """(separating?, right-side punctures) by exact ray casting.

    A horizontal ray at a height below every interior vertex is cast to
    +infinity; a puncture is on the right side iff the ray starting at it
    crosses the curve an even number of times.  The curve separates the two
    maximal ends iff the full horizontal line meets it an odd number of
    times.  Independent of all diagram combinatorics; used by tests.
    """
    ys = sorted({y for _, y in curve.vertices() if y > 0})
    if not ys:
        raise Degenerate("curve has no interior points")
    eps = ys[0] / 2
    hits = []  # x-coordinates where segments cross the line y = eps
    for (x1, y1), (x2, y2) in curve.segments():
        if (y1 - eps) * (y2 - eps) < 0:
            t = (eps - y1) / (y2 - y1)
            hits.append(x1 + t * (x2 - x1))
    if len(hits) % 2 == 1:
        separating = True
    else:
        separating = False
    if not separating:
        return (False, None)
    all_x = [x for x, _ in curve.vertices()]
    lo = int(min(all_x)) - 1 if window is None else window[0]
    hi = int(max(all_x)) + 2 if window is None else window[1]
    members = set()
    for n in range(lo, hi):
        if n in [x for x in hits]:
            raise Degenerate("ray passes through a crossing point")
        count = sum(1 for x in hits if x > n)
        if count % 2 == 0:
            members.add(n)
    return (True, SideAssignment(hi, frozenset(members)))
