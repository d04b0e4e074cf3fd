"""Symbolic separating curves on general translatable surfaces.

A separating curve on the Z-glued surface is recorded by which side it
leaves each end: one cofinitely-standard slot set per discrete end class
(the right-side slots, indexed by copy), a side map over Cantor chunks per
Cantor class, and a signed genus coordinate relative to the copy-0
boundary curve when the building block has finite genus.  Descriptors also
carry the construction trace that produced them (base curve, translations,
lassos); replaying a trace is deterministic and descriptor equality is
equality of the replayed side state.

The general lasso pulls a clopen collection of ends (payload) across the
curve: the payload's sides toggle and nothing else changes.  When the
payload matches a catalogue piece profile (one slot of some discrete
class, at least one chunk of every Cantor class, matching genus) the move
is witnessed as an edge of the translatable curve graph.  Adjacency in
this model is certificate-based: edges exist where a witnessed
construction step produced them.

Lassos with equal payloads need not produce isotopic curves (the arc may
wind), so each lasso carries an integer winding tag; non-zero tags
accumulate into the descriptor state and keep wound curves distinct from
their straight siblings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from .errors import InvalidSpec, NotComparable, SidesMixed, StaleChunk
from .sides import SideAssignment, threshold_set
from .surface import (
    GENUS_FINITE,
    INFINITE,
    CantorChunk,
    ChunkRegistry,
    PieceType,
    ValidatedSpec,
    piece_catalogue,
    spec_from_json,
    spec_to_json,
    validate_spec,
)

LEFT_SIDE = "L"
RIGHT_SIDE = "R"
_OTHER = {LEFT_SIDE: RIGHT_SIDE, RIGHT_SIDE: LEFT_SIDE}


# ---------------------------------------------------------------------------
# Cantor side maps


@dataclass(frozen=True)
class CantorSideMap:
    """Cofinitely-standard side assignment of one Cantor class's chunks.

    Copies >= threshold default to the right side, earlier copies to the
    left; ``overrides`` is a prefix-free set of (copy, path, side) entries,
    each governing its whole subtree.  Normal form stores the coarsest
    entries that actually differ from their surroundings, which keeps the
    map independent of how far the chunk registry happens to be split.
    """

    threshold: int
    overrides: Tuple[Tuple[int, str, str], ...] = ()

    def __post_init__(self) -> None:
        threshold, entries = self.threshold, self.overrides
        while True:
            entries = _normalize_overrides(threshold, entries)
            whole = {c: s for (c, p, s) in entries if p == ""}
            if whole.get(threshold - 1) == RIGHT_SIDE:
                entries = tuple(e for e in entries if e != (threshold - 1, "", RIGHT_SIDE))
                threshold -= 1
            elif whole.get(threshold) == LEFT_SIDE:
                entries = tuple(e for e in entries if e != (threshold, "", LEFT_SIDE))
                threshold += 1
            else:
                break
        object.__setattr__(self, "threshold", threshold)
        object.__setattr__(self, "overrides", entries)

    def default_side(self, copy: int) -> str:
        return RIGHT_SIDE if copy >= self.threshold else LEFT_SIDE

    def node_side(self, copy: int, path: str) -> Optional[str]:
        """Side of the whole subtree at (copy, path); None if mixed."""
        mine = [(p, s) for (c, p, s) in self.overrides if c == copy]
        for p, s in mine:
            if path.startswith(p):
                return s
        if any(p.startswith(path) for p, _ in mine):
            return None
        return self.default_side(copy)

    def flip_node(self, copy: int, path: str) -> "CantorSideMap":
        current = self.node_side(copy, path)
        if current is None:
            raise SidesMixed(f"subtree ({copy}, {path!r}) has mixed sides")
        entries = [(c, p, s) for (c, p, s) in self.overrides if not (c == copy and path.startswith(p))]
        anc = [(p, s) for (c, p, s) in self.overrides if c == copy and path.startswith(p)]
        if anc:
            base_path, _ = anc[0]
            # keep the old side on the sibling branches peeled off the
            # ancestor entry while descending to the flipped node
            at = base_path
            while at != path:
                nxt = path[len(at)]
                sib = at + ("1" if nxt == "0" else "0")
                entries.append((copy, sib, current))
                at += nxt
        entries.append((copy, path, _OTHER[current]))
        return CantorSideMap(self.threshold, tuple(entries))

    def shift(self, k: int) -> "CantorSideMap":
        return CantorSideMap(
            self.threshold + k, tuple((c + k, p, s) for c, p, s in self.overrides)
        )

    def _copies_of_interest(self, other: "CantorSideMap") -> Set[int]:
        copies = {c for c, _, _ in self.overrides} | {c for c, _, _ in other.overrides}
        lo = min(self.threshold, other.threshold)
        hi = max(self.threshold, other.threshold)
        copies.update(range(lo, hi))
        return copies

    def atoms_against(self, other: "CantorSideMap", copy: int) -> List[str]:
        """The common refinement of both entry antichains in one copy."""
        paths = {p for c, p, _ in self.overrides if c == copy}
        paths |= {p for c, p, _ in other.overrides if c == copy}
        atoms = {""}
        for p in sorted(paths, key=len):
            while True:
                anc = next((a for a in atoms if p != a and p.startswith(a)), None)
                if anc is None:
                    break
                atoms.remove(anc)
                atoms.add(anc + "0")
                atoms.add(anc + "1")
        return sorted(atoms)

    def right_nested_in(self, other: "CantorSideMap") -> bool:
        """Whether this map's right region is contained in the other's."""
        if self.threshold < other.threshold:
            return False
        for copy in self._copies_of_interest(other):
            for atom in self.atoms_against(other, copy):
                if self.node_side(copy, atom) == RIGHT_SIDE and other.node_side(
                    copy, atom
                ) != RIGHT_SIDE:
                    return False
        return True

    def atoms_between(self, right: "CantorSideMap") -> List[Tuple[int, str]]:
        """Subtrees on this map's right side but the other map's left side."""
        out = []
        for copy in sorted(self._copies_of_interest(right)):
            for atom in self.atoms_against(right, copy):
                if (
                    self.node_side(copy, atom) == RIGHT_SIDE
                    and right.node_side(copy, atom) == LEFT_SIDE
                ):
                    out.append((copy, atom))
        return out


def _normalize_overrides(threshold, entries):
    by_copy: Dict[int, Dict[str, str]] = {}
    for c, p, s in entries:
        by_copy.setdefault(c, {})[p] = s
    out = []
    for copy, table in by_copy.items():
        default = RIGHT_SIDE if copy >= threshold else LEFT_SIDE
        changed = True
        while changed:
            changed = False
            for p in sorted(table, key=len, reverse=True):
                if not p:
                    continue
                sib = p[:-1] + ("1" if p[-1] == "0" else "0")
                if sib in table and table[sib] == table[p]:
                    side = table.pop(p)
                    table.pop(sib)
                    table[p[:-1]] = side
                    changed = True
                    break
            for p in sorted(table, key=len):
                ctx = default
                for q in sorted(table, key=len):
                    if p != q and p.startswith(q):
                        ctx = table[q]
                if table[p] == ctx:
                    table.pop(p)
                    changed = True
                    break
        out.extend((copy, p, s) for p, s in table.items())
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Descriptors


TraceStep = Tuple  # ("base", i) | ("translate", k) | ("lasso", payload..., side, winding)


@dataclass(frozen=True)
class GeneralLasso:
    """Payload of ends to pull across a curve, with side and winding tag."""

    slots: FrozenSet[Tuple[int, int]]  # (discrete class, copy)
    chunks: Tuple[CantorChunk, ...] = ()
    genus: Union[int, str] = 0  # 0 | 1 | INFINITE
    side: str = RIGHT_SIDE
    winding: int = 0

    def payload_key(self) -> str:
        slots = ",".join(f"{c}:{i}" for c, i in sorted(self.slots))
        chunks = ",".join(
            f"{ch.cantor_class}:{ch.copy}:{ch.path or '.'}" for ch in sorted(
                self.chunks, key=lambda ch: (ch.cantor_class, ch.copy, ch.path)
            )
        )
        return f"[{slots}|{chunks}|{self.genus}]"


@dataclass(frozen=True)
class AdjacencyWitness:
    """Certificate that a lasso step is an edge of the curve graph:
    the catalogue piece matched by the payload plus the step itself."""

    piece: PieceType
    slots: FrozenSet[Tuple[int, int]]
    chunk_nodes: Tuple[Tuple[int, int, str], ...]
    genus: Union[int, str]
    side: str


@dataclass(frozen=True)
class CurveDescriptor:
    vspec: ValidatedSpec
    discrete: Tuple[SideAssignment, ...]
    cantor: Tuple[CantorSideMap, ...]
    genus_coord: int
    winding_marks: Tuple[Tuple[str, int], ...] = ()
    trace: Tuple[TraceStep, ...] = field(default=(), compare=False)

    def slot_side(self, cls: int, copy: int) -> str:
        return RIGHT_SIDE if copy in self.discrete[cls - 1] else LEFT_SIDE

    def support(self) -> Tuple[int, int]:
        """Copy range outside of which the descriptor is standard."""
        lo, hi = [], []
        for s in self.discrete:
            lo.append(min([s.threshold] + sorted(s.flips)) - 1)
            hi.append(s.threshold)
        for m in self.cantor:
            copies = [c for c, _, _ in m.overrides]
            lo.append(min([m.threshold] + copies) - 1)
            hi.append(max([m.threshold] + copies))
        if self.vspec.genus_mode == GENUS_FINITE:
            g = self.vspec.copy_genus()
            hi.append(-(-self.genus_coord // g) if self.genus_coord > 0 else 0)
            lo.append(self.genus_coord // g if self.genus_coord < 0 else 0)
        return (min(lo, default=0), max(hi, default=0))

    def key(self) -> str:
        ds = ";".join(
            f"{s.threshold}~{','.join(map(str, sorted(s.flips)))}" for s in self.discrete
        )
        cs = ";".join(
            f"{m.threshold}~{m.overrides}" for m in self.cantor
        )
        wm = ",".join(f"{k}^{w}" for k, w in self.winding_marks)
        return f"D[{ds}]C[{cs}]G{self.genus_coord}W[{wm}]"


def base_curve(vspec: ValidatedSpec, copy: int) -> CurveDescriptor:
    """The boundary curve between copies ``copy`` and ``copy + 1``."""
    return CurveDescriptor(
        vspec=vspec,
        discrete=tuple(threshold_set(copy + 1) for _ in range(vspec.n_discrete)),
        cantor=tuple(CantorSideMap(copy + 1) for _ in range(vspec.n_cantor)),
        genus_coord=vspec.copy_genus() * copy,
        trace=(("base", copy),),
    )


def translate_descriptor(d: CurveDescriptor, k: int) -> CurveDescriptor:
    return CurveDescriptor(
        vspec=d.vspec,
        discrete=tuple(s.shift(k) for s in d.discrete),
        cantor=tuple(m.shift(k) for m in d.cantor),
        genus_coord=d.genus_coord + d.vspec.copy_genus() * k,
        winding_marks=d.winding_marks,
        trace=d.trace + (("translate", k),),
    )


def _validate_payload(vspec: ValidatedSpec, l: GeneralLasso) -> None:
    for cls, _ in l.slots:
        if not 1 <= cls <= vspec.n_discrete:
            raise InvalidSpec(f"no discrete class {cls}")
    for ch in l.chunks:
        if not 1 <= ch.cantor_class <= vspec.n_cantor:
            raise InvalidSpec(f"no Cantor class {ch.cantor_class}")
    if l.genus == 1 and vspec.genus_mode != GENUS_FINITE:
        raise InvalidSpec("payload genus 1 requires a finite-genus surface")
    if l.genus == INFINITE:
        acc = vspec.accumulated
        touched = {f"f{c}" for c, _ in l.slots} | {
            f"c{ch.cantor_class}" for ch in l.chunks
        }
        if not touched & acc:
            raise InvalidSpec(
                "infinite payload genus requires a genus-accumulated payload end"
            )
    if l.genus not in (0, 1, INFINITE):
        raise InvalidSpec(f"payload genus must be 0, 1 or infinite, got {l.genus!r}")
    if l.side not in (LEFT_SIDE, RIGHT_SIDE):
        raise InvalidSpec(f"side must be 'L' or 'R', got {l.side!r}")


def _match_piece(vspec: ValidatedSpec, l: GeneralLasso) -> Optional[PieceType]:
    classes_covered = {ch.cantor_class for ch in l.chunks}
    if classes_covered != set(range(1, vspec.n_cantor + 1)):
        return None
    pieces = piece_catalogue(vspec)
    if len(l.slots) == 1:
        (cls, _), = l.slots
        piece = pieces[cls - 1]
        return piece if piece.genus == l.genus else None
    if not l.slots and vspec.genus_mode == GENUS_FINITE:
        piece = pieces[-1]
        return piece if l.genus == 1 else None
    return None


def apply_lasso(
    d: CurveDescriptor, l: GeneralLasso, registry: Optional[ChunkRegistry] = None
) -> Tuple[CurveDescriptor, Optional[AdjacencyWitness]]:
    """Pull the payload across the curve.

    The returned descriptor flips exactly the payload's sides (and moves
    the genus coordinate by the payload genus).  The witness is present
    iff the payload matches a catalogue piece, in which case the step is
    an edge of the translatable curve graph.
    """
    _validate_payload(d.vspec, l)
    if registry is not None:
        for ch in l.chunks:
            if not registry.is_live(ch):
                raise StaleChunk(f"payload chunk {ch} is not a live leaf")
    for cls, copy in l.slots:
        if d.slot_side(cls, copy) != l.side:
            raise SidesMixed(
                f"slot ({cls}, {copy}) is not on side {l.side!r} of the curve"
            )
    for ch in l.chunks:
        side = d.cantor[ch.cantor_class - 1].node_side(ch.copy, ch.path)
        if side != l.side:
            raise SidesMixed(f"chunk {ch} is not uniformly on side {l.side!r}")

    discrete = list(d.discrete)
    for cls in range(1, d.vspec.n_discrete + 1):
        slots = [i for c, i in l.slots if c == cls]
        if slots:
            discrete[cls - 1] = discrete[cls - 1].toggle(slots)
    cantor = list(d.cantor)
    for ch in l.chunks:
        cantor[ch.cantor_class - 1] = cantor[ch.cantor_class - 1].flip_node(
            ch.copy, ch.path
        )
    genus_step = 1 if l.genus == 1 else 0
    genus_coord = d.genus_coord + (genus_step if l.side == RIGHT_SIDE else -genus_step)
    marks = d.winding_marks
    if l.winding != 0:
        marks = tuple(sorted(marks + ((l.payload_key(), l.winding),)))
    step = (
        "lasso",
        tuple(sorted(l.slots)),
        tuple(sorted((c.cantor_class, c.copy, c.path) for c in l.chunks)),
        l.genus,
        l.side,
        l.winding,
    )
    new = CurveDescriptor(
        vspec=d.vspec,
        discrete=tuple(discrete),
        cantor=tuple(cantor),
        genus_coord=genus_coord,
        winding_marks=marks,
        trace=d.trace + (step,),
    )
    piece = _match_piece(d.vspec, l)
    witness = None
    if piece is not None:
        witness = AdjacencyWitness(
            piece=piece,
            slots=frozenset(l.slots),
            chunk_nodes=tuple(sorted((c.cantor_class, c.copy, c.path) for c in l.chunks)),
            genus=l.genus,
            side=l.side,
        )
    return new, witness


def verify_witness(
    a: CurveDescriptor, b: CurveDescriptor, w: AdjacencyWitness
) -> bool:
    """Recompute an adjacency witness from the two endpoint descriptors."""
    lasso = GeneralLasso(
        slots=w.slots,
        chunks=tuple(CantorChunk(c, i, p) for c, i, p in w.chunk_nodes),
        genus=w.genus,
        side=w.side,
    )
    if _match_piece(a.vspec, lasso) != w.piece:
        return False
    for cls in range(1, a.vspec.n_discrete + 1):
        want = frozenset(i for c, i in w.slots if c == cls)
        if a.discrete[cls - 1].symmetric_difference(b.discrete[cls - 1]) != want:
            return False
    for cls in range(1, a.vspec.n_cantor + 1):
        nodes = [(i, p) for c, i, p in w.chunk_nodes if c == cls]
        ma, mb = a.cantor[cls - 1], b.cantor[cls - 1]
        for copy in ma._copies_of_interest(mb) | {i for i, _ in nodes}:
            for atom in ma.atoms_against(mb, copy):
                differs = ma.node_side(copy, atom) != mb.node_side(copy, atom)
                covered = any(
                    i == copy and (atom.startswith(p) or p.startswith(atom))
                    for i, p in nodes
                )
                if differs != covered:
                    return False
    gstep = 1 if w.genus == 1 else 0
    want_delta = gstep if w.side == RIGHT_SIDE else -gstep
    if b.genus_coord - a.genus_coord != want_delta:
        return False
    return True


# ---------------------------------------------------------------------------
# Comparisons


def assert_nested(a: CurveDescriptor, b: CurveDescriptor) -> str:
    """Require one curve's right side to contain the other's; returns
    'right' if b is right of a, 'left' if left, 'equal' when state-equal."""
    if a == b:
        return "equal"
    if a.winding_marks != b.winding_marks:
        raise NotComparable("descriptors carry different winding marks")

    def right_of(x, y) -> bool:  # y right of x
        for sx, sy in zip(x.discrete, y.discrete):
            if not sy.issubset(sx):
                return False
        for mx, my in zip(x.cantor, y.cantor):
            if not my.right_nested_in(mx):
                return False
        if x.vspec.genus_mode == GENUS_FINITE and y.genus_coord < x.genus_coord:
            return False
        return True

    if right_of(a, b):
        return "right"
    if right_of(b, a):
        return "left"
    raise NotComparable("descriptor sides are not nested")


@dataclass(frozen=True)
class BetweenProfile:
    """End and genus content of the subsurface between nested curves."""

    slots: Tuple[Tuple[int, int], ...]  # (class, copy), left curve's right side
    cantor_atoms: Tuple[Tuple[int, int, str], ...]  # (class, copy, path)
    genus_delta: int

    def discrete_count(self) -> int:
        return len(self.slots)


def between_profile(a: CurveDescriptor, b: CurveDescriptor) -> BetweenProfile:
    """Profile of [a, b] for b right of a (raises NotComparable otherwise)."""
    order = assert_nested(a, b)
    if order == "left":
        a, b = b, a
    slots = []
    for cls in range(1, a.vspec.n_discrete + 1):
        for copy in sorted(a.discrete[cls - 1].symmetric_difference(b.discrete[cls - 1])):
            slots.append((cls, copy))
    atoms = []
    for cls in range(1, a.vspec.n_cantor + 1):
        for copy, path in a.cantor[cls - 1].atoms_between(b.cantor[cls - 1]):
            atoms.append((cls, copy, path))
    gd = (
        b.genus_coord - a.genus_coord
        if a.vspec.genus_mode == GENUS_FINITE
        else 0
    )
    return BetweenProfile(tuple(slots), tuple(atoms), gd)


def is_full(a: CurveDescriptor, b: CurveDescriptor) -> bool:
    """Whether [a, b] meets every maximal end class (and has positive genus
    when there is no discrete class at all)."""
    prof = between_profile(a, b)
    classes_with_slots = {cls for cls, _ in prof.slots}
    if classes_with_slots != set(range(1, a.vspec.n_discrete + 1)):
        return False
    cantor_classes = {cls for cls, _, _ in prof.cantor_atoms}
    if cantor_classes != set(range(1, a.vspec.n_cantor + 1)):
        return False
    if a.vspec.n_discrete == 0 and prof.genus_delta < 1:
        return False
    return True


# ---------------------------------------------------------------------------
# JSON: descriptors serialize as replayable traces


def descriptor_to_json(d: CurveDescriptor) -> str:
    return json.dumps(
        {
            "surface": json.loads(spec_to_json(d.vspec.spec)),
            "trace": [list(step) for step in d.trace],
        }
    )


def replay_trace(vspec: ValidatedSpec, trace: Sequence[Sequence]) -> CurveDescriptor:
    d: Optional[CurveDescriptor] = None
    for step in trace:
        kind = step[0]
        if kind == "base":
            d = base_curve(vspec, int(step[1]))
        elif kind == "translate":
            if d is None:
                raise InvalidSpec("trace must start with a base curve")
            d = translate_descriptor(d, int(step[1]))
        elif kind == "lasso":
            if d is None:
                raise InvalidSpec("trace must start with a base curve")
            _, slots, chunks, genus, side, winding = step
            lasso = GeneralLasso(
                slots=frozenset((int(c), int(i)) for c, i in slots),
                chunks=tuple(CantorChunk(int(c), int(i), str(p)) for c, i, p in chunks),
                genus=genus if genus == INFINITE else int(genus),
                side=str(side),
                winding=int(winding),
            )
            d, _ = apply_lasso(d, lasso)
        else:
            raise InvalidSpec(f"unknown trace step {kind!r}")
    if d is None:
        raise InvalidSpec("empty construction trace")
    return d


def descriptor_from_json(text: str) -> CurveDescriptor:
    data = json.loads(text)
    vspec = validate_spec(spec_from_json(json.dumps(data["surface"])))
    return replay_trace(vspec, data["trace"])
