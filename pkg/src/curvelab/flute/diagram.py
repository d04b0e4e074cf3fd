"""Crossing diagrams: canonical encodings of curves on the bi-infinite flute.

The flute is the infinite cylinder R x (R/Z) with a puncture at (n, 0) for
every integer n.  The reference line L is the image of R x {0}.  Cutting
the cylinder along L yields the strip R x [0, 1]; an essential simple
closed curve transverse to L becomes a family of pairwise disjoint arcs
whose endpoints lie on the strip's bottom (y = 0+) and top (y = 1-) edges.

A diagram records the crossings with L in left-to-right order.  Each
crossing carries its gap (the crossing lies between punctures g and g+1)
and a direction: ``U`` if the curve passes the seam with increasing y,
``D`` otherwise.  A ``U`` crossing is entered from the top edge and exits
at the bottom edge; ``D`` is the reverse.  The traversal order of the
crossings along the curve is the successor permutation: succ[i] = j means
one arc runs from the outgoing end of crossing i to the incoming end of
crossing j.

Well-formedness facts used throughout (all consequences of embeddedness):

- boundary endpoints, cyclically ordered b_0 .. b_{m-1} (bottom, left to
  right) then t_{m-1} .. t_0 (top, right to left), admit disjoint arcs
  iff the induced chord matching is non-crossing in this cyclic order;
- directions alternate in left-to-right order along L;
- the winding number #U - #D lies in {-1, 0, +1}, and the curve separates
  the two maximal ends exactly when it is +-1.

Isotopy classes are represented by canonical diagrams: reduce every empty
bigon against L (an adjacent same-gap crossing pair joined by a single
arc), then normalize the traversal orientation lexicographically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from ..errors import InvalidDiagram, NotRealizable

UP = "U"
DOWN = "D"
_FLIP = {UP: DOWN, DOWN: UP}

Crossing = Tuple[int, str]  # (gap, direction)


@dataclass(frozen=True)
class CrossingDiagram:
    """Immutable crossing diagram; construct via :func:`diagram`."""

    crossings: Tuple[Crossing, ...]
    succ: Tuple[int, ...]
    canonical: bool = field(default=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.crossings)

    def gaps(self) -> Tuple[int, ...]:
        return tuple(g for g, _ in self.crossings)

    def key(self) -> str:
        """Stable string key (sorting, dict keys, DOT labels)."""
        cr = "|".join(f"{g}{d}" for g, d in self.crossings)
        sc = ",".join(str(j) for j in self.succ)
        return f"{cr};{sc}"

    def __str__(self) -> str:
        return self.key()


def diagram(crossings: Iterable[Crossing], succ: Iterable[int]) -> CrossingDiagram:
    d = CrossingDiagram(tuple((int(g), str(dr)) for g, dr in crossings), tuple(succ))
    validate_diagram(d)
    return d


def validate_diagram(d: CrossingDiagram) -> None:
    """Raise unless the diagram describes an embedded closed curve."""
    m = d.size
    if m == 0:
        raise InvalidDiagram("a curve disjoint from the reference line bounds a disk")
    for g, dr in d.crossings:
        if dr not in (UP, DOWN):
            raise InvalidDiagram(f"direction must be 'U' or 'D', got {dr!r}")
    for i in range(m - 1):
        if d.crossings[i][0] > d.crossings[i + 1][0]:
            raise InvalidDiagram("gaps must be non-decreasing left to right")
        if d.crossings[i][1] == d.crossings[i + 1][1]:
            raise InvalidDiagram("directions must alternate along the line")
    if len(d.succ) != m or sorted(d.succ) != list(range(m)):
        raise InvalidDiagram("succ must be a permutation of 0..m-1")
    # single closed curve <=> successor is one cycle
    seen = 1
    at = d.succ[0]
    while at != 0:
        at = d.succ[at]
        seen += 1
        if seen > m:
            break
    if seen != m:
        raise InvalidDiagram("succ must be a single cycle (one connected curve)")
    if not _noncrossing(_chords(d.crossings, d.succ)):
        raise NotRealizable("arcs cannot be drawn disjointly (matching crosses)")


def _chords(crossings: Sequence[Crossing], succ: Sequence[int]) -> List[Tuple[int, int]]:
    """Arcs as chords on the boundary circle b_0..b_{m-1}, t_{m-1}..t_0."""
    m = len(crossings)

    def pos_b(i: int) -> int:
        return i

    def pos_t(i: int) -> int:
        return 2 * m - 1 - i

    chords = []
    for i in range(m):
        j = succ[i]
        p1 = pos_b(i) if crossings[i][1] == UP else pos_t(i)  # outgoing end
        p2 = pos_t(j) if crossings[j][1] == UP else pos_b(j)  # incoming end
        chords.append((min(p1, p2), max(p1, p2)))
    return chords


def _noncrossing(chords: Sequence[Tuple[int, int]]) -> bool:
    n = len(chords)
    for i in range(n):
        a1, b1 = chords[i]
        for j in range(i + 1, n):
            a2, b2 = chords[j]
            if (a1 < a2 < b1 < b2) or (a2 < a1 < b2 < b1):
                return False
    return True


# ---------------------------------------------------------------------------
# Canonicalization


def _reduce_bigon_once(crossings: List[Crossing], succ: List[int]):
    """Remove one empty bigon (leftmost), or return None if reduced.

    A bigon pair is adjacent along L, in the same gap, and joined by a
    single arc.  The arc together with the seam segment between the two
    crossings then bounds a disk containing no punctures (same gap) and no
    other arcs (nothing can cross the boundary), so it always cancels.
    """
    m = len(crossings)
    for i in range(m - 1):
        if crossings[i][0] != crossings[i + 1][0]:
            continue
        fwd = succ[i] == i + 1
        bwd = succ[i + 1] == i
        if not (fwd or bwd):
            continue
        if fwd and bwd:  # two-crossing diagram: the whole curve cancels
            return [], []
        a, b = (i, i + 1) if fwd else (i + 1, i)
        pred_a = succ.index(a)
        target = succ[b]
        new_cr = [c for k, c in enumerate(crossings) if k not in (i, i + 1)]
        remap = {}
        for k in range(m):
            if k in (i, i + 1):
                continue
            remap[k] = k if k < i else k - 2
        new_succ = [0] * (m - 2)
        for k in range(m):
            if k in (i, i + 1):
                continue
            j = target if k == pred_a else succ[k]
            new_succ[remap[k]] = remap[j]
        return new_cr, new_succ
    return None


def _reversed(crossings: Sequence[Crossing], succ: Sequence[int]):
    """The same curve traversed backwards: flip directions, invert succ."""
    m = len(crossings)
    inv = [0] * m
    for i, j in enumerate(succ):
        inv[j] = i
    return [(g, _FLIP[dr]) for g, dr in crossings], inv


def canonicalize(d: CrossingDiagram) -> CrossingDiagram:
    """Bigon-reduce and orientation-normalize; idempotent.

    Canonical diagrams of isotopic curves are equal; equality of canonical
    diagrams is the library's notion of curve equality (anchored against
    the polyline geometry oracle in the test suite).
    """
    validate_diagram(d)
    crossings, succ = list(d.crossings), list(d.succ)
    while True:
        step = _reduce_bigon_once(crossings, succ)
        if step is None:
            break
        crossings, succ = step
        if not crossings:
            raise NotRealizable("curve is inessential: it reduces to the empty diagram")
    rev_cr, rev_succ = _reversed(crossings, succ)
    fwd_enc = (tuple(crossings), tuple(succ))
    rev_enc = (tuple(rev_cr), tuple(rev_succ))
    enc = min(fwd_enc, rev_enc)
    return CrossingDiagram(enc[0], enc[1], canonical=True)


def translate(d: CrossingDiagram, k: int) -> CrossingDiagram:
    """Image under the k-th power of the unit translation (gap shift).

    Shifting every gap by the same amount commutes with bigon reduction and
    with the orientation tie-break, so canonical stays canonical.
    """
    return CrossingDiagram(
        tuple((g + k, dr) for g, dr in d.crossings), d.succ, canonical=d.canonical
    )


def standard_circle(n: int) -> CrossingDiagram:
    """The boundary circle between copies n and n+1 (one crossing in gap n)."""
    return canonicalize(diagram([(n, UP)], [0]))


def is_standard_circle(d: CrossingDiagram):
    """Return the copy index if d is a standard circle, else None."""
    if d.size == 1:
        return d.crossings[0][0]
    return None


def winding(d: CrossingDiagram) -> int:
    ups = sum(1 for _, dr in d.crossings if dr == UP)
    return 2 * ups - d.size


# ---------------------------------------------------------------------------
# JSON interface


def diagram_to_json(d: CrossingDiagram) -> str:
    return json.dumps(
        {
            "crossings": [{"gap": g, "dir": dr} for g, dr in d.crossings],
            "succ": list(d.succ),
        }
    )


def diagram_from_json(text: str) -> CrossingDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDiagram(f"not valid JSON: {exc}") from exc
    try:
        crossings = [(int(c["gap"]), str(c["dir"])) for c in data["crossings"]]
        succ = [int(j) for j in data["succ"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDiagram(f"missing or malformed field: {exc}") from exc
    return diagram(crossings, succ)
