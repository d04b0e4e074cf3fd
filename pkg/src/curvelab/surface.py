"""Surface data model: end-class catalogue, piece set, Cantor chunk registry.

A translatable surface is built from Z-many glued copies of a two-boundary
piece S.  We record S by the counts of its maximal end classes (N discrete,
M Cantor), its genus mode, and which classes are accumulated by genus.  The
edge pieces T_1 .. T_N (one per discrete class) and, in the finite-genus
case, the genus piece T_{N+1} define adjacency in the translatable curve
graph: two separating curves are neighbors when the subsurface between them
matches a catalogue piece.

Cantor end classes are never realized as point sets.  Clopen subsets are
symbolic leaves of a binary splitting tree, one tree per (class, copy)
cell, managed by a single-writer ChunkRegistry.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Set, Tuple, Union

from .errors import InvalidSpec, StaleChunk

GENUS_ZERO = "zero"
GENUS_FINITE = "finite"
GENUS_INFINITE = "infinite"

#: Distinguished genus token for pieces of infinite genus; never an integer.
INFINITE = "infinite"

_CLASS_ID = re.compile(r"^(f|c)([1-9][0-9]*)$")


@dataclass(frozen=True)
class SurfaceSpec:
    """Raw description of the building-block surface S."""

    n_discrete: int
    n_cantor: int
    genus_mode: str
    genus: int = 0
    accumulated: FrozenSet[str] = field(default_factory=frozenset)

    def class_ids(self) -> List[str]:
        return [f"f{i}" for i in range(1, self.n_discrete + 1)] + [
            f"c{j}" for j in range(1, self.n_cantor + 1)
        ]


@dataclass(frozen=True)
class ValidatedSpec:
    """A SurfaceSpec that passed validation; carries convenience accessors."""

    spec: SurfaceSpec

    @property
    def n_discrete(self) -> int:
        return self.spec.n_discrete

    @property
    def n_cantor(self) -> int:
        return self.spec.n_cantor

    @property
    def genus_mode(self) -> str:
        return self.spec.genus_mode

    @property
    def genus(self) -> int:
        return self.spec.genus

    @property
    def accumulated(self) -> FrozenSet[str]:
        return self.spec.accumulated

    def copy_genus(self) -> int:
        """Genus contributed by one copy of S when genus is finite, else 0."""
        return self.spec.genus if self.spec.genus_mode == GENUS_FINITE else 0


@dataclass(frozen=True)
class PieceType:
    """One catalogue piece: a two-boundary subsurface defining an edge type."""

    id: int
    has_discrete_end: bool
    discrete_class: Union[int, None]
    genus: Union[int, str]  # 0, 1 or INFINITE


def validate_spec(spec: SurfaceSpec) -> ValidatedSpec:
    """Check the structural invariants and reject bounded-graph cases.

    The degenerate case N = 0 with genus zero or infinite makes the piece
    set collapse to {S} and the curve graph has diameter 2, so it carries
    no large-scale geometry; it is rejected with a diagnostic.
    """
    n, m = spec.n_discrete, spec.n_cantor
    if n < 0 or m < 0:
        raise InvalidSpec("end class counts must be non-negative")
    if n + m < 1:
        raise InvalidSpec("at least one maximal end class is required")
    if spec.genus_mode not in (GENUS_ZERO, GENUS_FINITE, GENUS_INFINITE):
        raise InvalidSpec(f"unknown genus mode {spec.genus_mode!r}")
    if spec.genus_mode == GENUS_FINITE and spec.genus < 1:
        raise InvalidSpec("finite genus mode requires genus >= 1")
    if spec.genus_mode != GENUS_FINITE and spec.genus != 0:
        raise InvalidSpec("genus must be 0 unless the mode is finite")
    if n == 0 and spec.genus_mode != GENUS_FINITE:
        raise InvalidSpec(
            "N=0 with zero or infinite genus makes the translatable curve "
            "graph bounded (piece set {S}, diameter 2); out of scope"
        )
    valid_ids = set(spec.class_ids())
    for cid in spec.accumulated:
        if not _CLASS_ID.match(cid):
            raise InvalidSpec(f"malformed class id {cid!r}")
        if cid not in valid_ids:
            raise InvalidSpec(f"accumulated class {cid!r} does not exist")
    if spec.genus_mode == GENUS_ZERO and spec.accumulated:
        raise InvalidSpec("a genus-zero surface has no genus-accumulated ends")
    if spec.genus_mode == GENUS_FINITE and spec.accumulated:
        raise InvalidSpec("finite total genus excludes genus-accumulated ends")
    if spec.genus_mode == GENUS_INFINITE and not spec.accumulated:
        raise InvalidSpec(
            "infinite genus must accumulate to at least one maximal end class"
        )
    return ValidatedSpec(spec)


def piece_catalogue(vspec: ValidatedSpec) -> List[PieceType]:
    """The pieces T_1 .. T_N (+ T_{N+1} in the finite-genus case).

    T_i carries exactly one discrete-type end (class i) plus a clopen chunk
    of every Cantor class; its genus is infinite iff class i or any Cantor
    class is accumulated by genus.  T_{N+1} exists only for finite positive
    genus, has genus 1 and no discrete end.  Deterministic and order-stable.
    """
    spec = vspec.spec
    cantor_accumulated = any(
        f"c{j}" in spec.accumulated for j in range(1, spec.n_cantor + 1)
    )
    pieces = []
    for i in range(1, spec.n_discrete + 1):
        inf = cantor_accumulated or (f"f{i}" in spec.accumulated)
        pieces.append(
            PieceType(
                id=i,
                has_discrete_end=True,
                discrete_class=i,
                genus=INFINITE if inf else 0,
            )
        )
    if spec.genus_mode == GENUS_FINITE:
        pieces.append(
            PieceType(
                id=spec.n_discrete + 1,
                has_discrete_end=False,
                discrete_class=None,
                genus=1,
            )
        )
    return pieces


# ---------------------------------------------------------------------------
# Cantor chunks


@dataclass(frozen=True)
class CantorChunk:
    """A live leaf of the splitting tree for one (class, copy) cell.

    ``path`` is the bit string of left/right splits from the root; the root
    chunk of a cell has the empty path.
    """

    cantor_class: int  # 1-based class index
    copy: int
    path: str

    def cell(self) -> Tuple[int, int]:
        return (self.cantor_class, self.copy)

    def children(self) -> Tuple["CantorChunk", "CantorChunk"]:
        return (
            CantorChunk(self.cantor_class, self.copy, self.path + "0"),
            CantorChunk(self.cantor_class, self.copy, self.path + "1"),
        )


class ChunkRegistry:
    """Live leaves of every (class, copy) splitting tree.

    Single-writer: splitting mutates the registry in place.  The live
    leaves of each cell always partition it (an antichain covering the
    root): splitting retires a leaf and replaces it by its two children.
    Cells materialize lazily with the root chunk live.
    """

    def __init__(self, vspec: ValidatedSpec):
        self.vspec = vspec
        self._leaves: Dict[Tuple[int, int], Set[str]] = {}

    def _cell(self, cantor_class: int, copy: int) -> Set[str]:
        if not 1 <= cantor_class <= self.vspec.n_cantor:
            raise InvalidSpec(f"no Cantor class {cantor_class}")
        return self._leaves.setdefault((cantor_class, copy), {""})

    def root(self, cantor_class: int, copy: int) -> CantorChunk:
        self._cell(cantor_class, copy)
        return CantorChunk(cantor_class, copy, "")

    def is_live(self, chunk: CantorChunk) -> bool:
        return chunk.path in self._cell(chunk.cantor_class, chunk.copy)

    def live_leaves(self, cantor_class: int, copy: int) -> List[CantorChunk]:
        paths = sorted(self._cell(cantor_class, copy))
        return [CantorChunk(cantor_class, copy, p) for p in paths]

    def live_leaves_under(self, cantor_class: int, copy: int, path: str) -> List[CantorChunk]:
        paths = sorted(
            p for p in self._cell(cantor_class, copy) if p.startswith(path)
        )
        return [CantorChunk(cantor_class, copy, p) for p in paths]

    def split_chunk(self, chunk: CantorChunk) -> Tuple[CantorChunk, CantorChunk]:
        """Retire a live leaf and make its two children live."""
        cell = self._cell(chunk.cantor_class, chunk.copy)
        if chunk.path not in cell:
            raise StaleChunk(f"chunk {chunk} is not a live leaf")
        cell.remove(chunk.path)
        left, right = chunk.children()
        cell.add(left.path)
        cell.add(right.path)
        return left, right


# ---------------------------------------------------------------------------
# JSON interface


def spec_to_json(spec: SurfaceSpec) -> str:
    genus: Union[int, str]
    if spec.genus_mode == GENUS_FINITE:
        genus = spec.genus
    else:
        genus = spec.genus_mode
    return json.dumps(
        {
            "n_discrete": spec.n_discrete,
            "n_cantor": spec.n_cantor,
            "genus": genus,
            "accumulated": sorted(spec.accumulated),
        }
    )


def spec_from_json(text: str) -> SurfaceSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidSpec("surface spec must be a JSON object")
    try:
        n = int(data["n_discrete"])
        m = int(data["n_cantor"])
        genus = data["genus"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"missing or malformed field: {exc}") from exc
    accumulated = frozenset(data.get("accumulated", []))
    if genus == "zero":
        mode, g = GENUS_ZERO, 0
    elif genus == "infinite":
        mode, g = GENUS_INFINITE, 0
    elif isinstance(genus, int) and not isinstance(genus, bool):
        mode, g = GENUS_FINITE, genus
    else:
        raise InvalidSpec(f"genus must be 'zero', 'infinite' or an integer, got {genus!r}")
    return SurfaceSpec(n, m, mode, g, accumulated)


def flute_spec() -> SurfaceSpec:
    """The bi-infinite flute: one discrete class, genus zero."""
    return SurfaceSpec(1, 0, GENUS_ZERO)
