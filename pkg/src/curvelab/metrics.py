"""Flux and Hamming pseudometrics with the flux-side trichotomy.

Both pseudometrics are integer-valued lower bounds for the translatable
curve graph distance.  They are computed from a curve's side profile: one
cofinitely-standard set of right-side slots per discrete end class, plus a
signed genus coordinate in the finite-genus case.

For disjoint curves the base flux counts the discrete-type ends between
them plus the genus between them (genus counted only when the building
block has finite genus).  For arbitrary pairs the flux compares base-flux
values against a reference curve on a common side; any reference gives the
same answer, because base flux is additive along nested triples, so a
single far reference on each side also decides whether one curve is
flux-right or flux-left of the other (neutral exactly when the flux
vanishes).  The Hamming distance refines flux: the size of the symmetric
difference of right-side slot sets plus the genus component.

The computations are shared by two curve families: crossing diagrams on
the bi-infinite flute and symbolic descriptors on general translatable
surfaces.  A family contributes its side profile, its disjointness gate,
and a notion of "far reference index".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import BadReference
from .sides import SideAssignment

RIGHT = "right"
LEFT = "left"
NEUTRAL = "neutral"


@dataclass(frozen=True)
class FluxValue:
    """Discrete-end and genus components of flux; total = p + g."""

    p: int
    g: int

    @property
    def total(self) -> int:
        return self.p + self.g


@dataclass(frozen=True)
class _Profile:
    sides: Tuple[SideAssignment, ...]
    genus_coord: int


class MetricContext:
    """Shared flux/Hamming algorithms over one curve family."""

    # family responsibilities ------------------------------------------------

    def profile(self, curve) -> _Profile:
        raise NotImplementedError

    def genus_active(self) -> bool:
        """Whether the genus coordinate contributes (finite-genus mode)."""
        raise NotImplementedError

    def copy_genus(self) -> int:
        """Genus of one copy of the building block (0 unless finite mode)."""
        raise NotImplementedError

    def assert_disjoint(self, a, b) -> None:
        raise NotImplementedError

    def far_copies(self, curves: Sequence) -> Tuple[int, int]:
        """(mL, mR): copy indices strictly beyond every curve's support."""
        raise NotImplementedError

    # shared algorithms -------------------------------------------------------

    def _p0_g0_right(self, prof: _Profile, m: int) -> Tuple[int, int]:
        p = sum(s.count_members_below(m) for s in prof.sides)
        g = self.copy_genus() * m - prof.genus_coord if self.genus_active() else 0
        return p, g

    def _p0_g0_left(self, prof: _Profile, m: int) -> Tuple[int, int]:
        p = sum(s.count_nonmembers_from(m) for s in prof.sides)
        g = prof.genus_coord - self.copy_genus() * m if self.genus_active() else 0
        return p, g

    def flux0(self, a, b) -> FluxValue:
        """Base flux of a disjoint pair: ends and genus between the curves."""
        self.assert_disjoint(a, b)
        pa, pb = self.profile(a), self.profile(b)
        p = sum(sa.hamming(sb) for sa, sb in zip(pa.sides, pb.sides))
        g = abs(pa.genus_coord - pb.genus_coord) if self.genus_active() else 0
        return FluxValue(p, g)

    def flux(self, a, b, gamma=None) -> FluxValue:
        """Flux of an arbitrary pair via a common-side reference.

        With gamma omitted, a far right-side reference is synthesized from
        the side profiles; reference independence makes any explicit choice
        equivalent, and a gamma not on a common side raises BadReference.
        """
        pa, pb = self.profile(a), self.profile(b)
        if gamma is None:
            _, m_r = self.far_copies([a, b])
            p1, g1 = self._p0_g0_right(pa, m_r)
            p2, g2 = self._p0_g0_right(pb, m_r)
            return FluxValue(abs(p1 - p2), abs(g1 - g2))
        side = self._common_side(a, b, gamma)
        pg = self.profile(gamma)
        pairs = []
        for prof in (pa, pb):
            p = sum(sa.hamming(sg) for sa, sg in zip(prof.sides, pg.sides))
            g = abs(prof.genus_coord - pg.genus_coord) if self.genus_active() else 0
            pairs.append((p, g))
        (p1, g1), (p2, g2) = pairs
        return FluxValue(abs(p1 - p2), abs(g1 - g2))

    def _common_side(self, a, b, gamma) -> str:
        pg = self.profile(gamma).sides
        pa, pb = self.profile(a).sides, self.profile(b).sides
        if all(g.issubset(x) for g, x in zip(pg, pa)) and all(
            g.issubset(x) for g, x in zip(pg, pb)
        ):
            side = RIGHT
        elif all(x.issubset(g) for g, x in zip(pg, pa)) and all(
            x.issubset(g) for g, x in zip(pg, pb)
        ):
            side = LEFT
        else:
            raise BadReference("reference must lie on a common side of both curves")
        self.assert_disjoint(a, gamma)
        self.assert_disjoint(b, gamma)
        return side

    def hamming(self, a, b) -> int:
        """Symmetric difference of right-side slot sets, plus genus."""
        pa, pb = self.profile(a), self.profile(b)
        h = sum(sa.hamming(sb) for sa, sb in zip(pa.sides, pb.sides))
        if self.genus_active():
            h += abs(pa.genus_coord - pb.genus_coord)
        return h

    def flux_side(self, a, b) -> str:
        """Whether b is flux-right, flux-left, or both (neutral) of a.

        Decided against a single far reference on each side; base-flux
        additivity makes the answer independent of the choice.  Neutral
        happens exactly when flux(a, b) = 0.
        """
        pa, pb = self.profile(a), self.profile(b)
        m_l, m_r = self.far_copies([a, b])
        ra = sum(self._p0_g0_right(pa, m_r))
        rb = sum(self._p0_g0_right(pb, m_r))
        la = sum(self._p0_g0_left(pa, m_l))
        lb = sum(self._p0_g0_left(pb, m_l))
        right_ok = ra >= rb
        left_ok = la >= lb
        if right_ok and left_ok:
            return NEUTRAL
        if right_ok:
            return RIGHT
        if left_ok:
            return LEFT
        raise AssertionError("flux-side dichotomy violated")


class FluteMetrics(MetricContext):
    """Metrics over canonical crossing diagrams on the bi-infinite flute."""

    def __init__(self):
        self._partition_cache = {}

    def _partition(self, d) -> SideAssignment:
        key = d.key()
        if key not in self._partition_cache:
            from .flute.ops import puncture_partition

            self._partition_cache[key] = puncture_partition(d)
        return self._partition_cache[key]

    def profile(self, curve) -> _Profile:
        return _Profile((self._partition(curve),), 0)

    def genus_active(self) -> bool:
        return False

    def copy_genus(self) -> int:
        return 0

    def assert_disjoint(self, a, b) -> None:
        from .errors import NotDisjoint
        from .flute.ops import disjointly_realizable

        if not disjointly_realizable(a, b):
            raise NotDisjoint("the curves admit no disjoint representatives")

    def far_copies(self, curves: Sequence) -> Tuple[int, int]:
        gaps = [g for d in curves for g in d.gaps()]
        return (min(gaps) - 1, max(gaps) + 2)


class DescriptorMetrics(MetricContext):
    """Metrics over symbolic descriptors on a validated surface."""

    def __init__(self, vspec):
        self.vspec = vspec

    def profile(self, curve) -> _Profile:
        return _Profile(curve.discrete, curve.genus_coord)

    def genus_active(self) -> bool:
        from .surface import GENUS_FINITE

        return self.vspec.genus_mode == GENUS_FINITE

    def copy_genus(self) -> int:
        return self.vspec.copy_genus()

    def assert_disjoint(self, a, b) -> None:
        from .descriptors import assert_nested
        from .errors import NotComparable, NotDisjoint

        try:
            assert_nested(a, b)
        except NotComparable as exc:
            raise NotDisjoint(str(exc)) from exc

    def far_copies(self, curves: Sequence) -> Tuple[int, int]:
        los, his = [], []
        for c in curves:
            lo, hi = c.support()
            los.append(lo)
            his.append(hi)
        return (min(los) - 2, max(his) + 2)
