"""Finite-truncation ground truth for the translatable curve graph.

The graph is locally infinite (every vertex has uncountably many
neighbors), so exact statements are checked on finite slices: the closure
of a seed set under lasso-neighbor enumeration restricted to a carrier
window, a winding bound, and a canonical-size bound, optionally truncated
at a BFS depth.  Slice distances upper-bound true graph distances, and
equal them whenever a matching flux or Hamming lower bound is available;
vertices whose enumeration hit any bound carry a conservative boundary
flag, and a component of a ball complement counts as "pseudo-unbounded"
when it touches a flagged vertex.

Synthetic fixtures (line, grid) ship alongside so the ends machinery can
be validated independently of all curve code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import CapExceeded, Exhausted, VertexMissing
from .flute import Carrier, CrossingDiagram, canonicalize, enumerate_neighbors


@dataclass(frozen=True)
class UniverseSpec:
    """Bounds for one finite slice of the curve graph."""

    window: Tuple[int, int]  # carrier copy interval [lo, hi]
    winding_bound: int = 0
    max_size: int = 7  # largest admitted canonical crossing count
    seeds: Tuple[CrossingDiagram, ...] = ()
    max_depth: Optional[int] = None  # BFS depth from the seeds; None = closure
    max_vertices: int = 60_000

    def carrier(self) -> Carrier:
        return Carrier(self.window[0], self.window[1])

    def admits(self, d: CrossingDiagram) -> bool:
        return d.size <= self.max_size and self.carrier().carries(d)


@dataclass
class FiniteGraphSlice:
    """An explicit finite graph with conservative truncation markers."""

    vertices: List[str]
    adjacency: Dict[str, List[str]]
    boundary: Set[str]
    payload: Dict[str, CrossingDiagram] = field(default_factory=dict)

    def __contains__(self, key: str) -> bool:
        return key in self.adjacency

    def require(self, key: str) -> None:
        if key not in self.adjacency:
            raise VertexMissing(f"vertex {key!r} is not in the slice")

    def degree(self, key: str) -> int:
        return len(self.adjacency[key])

    def edge_count(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2


def build_universe(uspec: UniverseSpec) -> FiniteGraphSlice:
    """Close the seeds under admitted lasso neighbors, breadth first.

    Deterministic: the frontier is processed in canonical-key order.  A
    vertex is flagged as boundary when enumeration at that vertex produced
    a rejected neighbor or when it sits at the depth cutoff.  Raises
    Exhausted when the vertex budget is hit.
    """
    if uspec.window[0] > uspec.window[1] or uspec.winding_bound < 0:
        raise ValueError("universe bounds must be positive")
    carrier = uspec.carrier()
    seeds = [canonicalize(s) for s in uspec.seeds]
    for s in seeds:
        if not uspec.admits(s):
            raise VertexMissing(f"seed {s.key()} violates the universe bounds")
    payload: Dict[str, CrossingDiagram] = {s.key(): s for s in seeds}
    adjacency: Dict[str, Set[str]] = {s.key(): set() for s in seeds}
    boundary: Set[str] = set()
    depth: Dict[str, int] = {s.key(): 0 for s in seeds}
    queue = deque(sorted(payload))
    while queue:
        key = queue.popleft()
        d = payload[key]
        if uspec.max_depth is not None and depth[key] >= uspec.max_depth:
            boundary.add(key)
            continue
        rejected = False
        for nb in enumerate_neighbors(d, carrier, uspec.winding_bound):
            if not uspec.admits(nb):
                rejected = True
                continue
            nk = nb.key()
            if nk not in adjacency:
                if len(adjacency) >= uspec.max_vertices:
                    raise Exhausted(
                        f"universe exceeded {uspec.max_vertices} vertices"
                    )
                adjacency[nk] = set()
                payload[nk] = nb
                depth[nk] = depth[key] + 1
                queue.append(nk)
            adjacency[key].add(nk)
            adjacency[nk].add(key)
        if rejected:
            boundary.add(key)
    return FiniteGraphSlice(
        vertices=sorted(adjacency),
        adjacency={k: sorted(v) for k, v in adjacency.items()},
        boundary=boundary,
        payload=payload,
    )


# ---------------------------------------------------------------------------
# Distances and geodesics


def bfs_distances(g: FiniteGraphSlice, a: str) -> Dict[str, int]:
    g.require(a)
    dist = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if v not in dist:
                dist[v] = du + 1
                queue.append(v)
    return dist


def bfs_distance(g: FiniteGraphSlice, a: str, b: str) -> Optional[int]:
    """Exact distance within the slice; None when unreachable.

    Upper-bounds the true graph distance and equals it whenever a
    certified lower bound of the same value exists.
    """
    g.require(a)
    g.require(b)
    if a == b:
        return 0
    dist = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                if v == b:
                    return dist[v]
                queue.append(v)
    return None


def all_geodesics(
    g: FiniteGraphSlice, a: str, b: str, cap: int = 10_000
) -> List[List[str]]:
    """Every shortest a-b path in the slice, via the layered BFS dag."""
    g.require(a)
    g.require(b)
    dist = bfs_distances(g, a)
    if b not in dist:
        return []
    paths: List[List[str]] = []

    def back(v: str, suffix: List[str]) -> None:
        if len(paths) > cap:
            raise CapExceeded(f"more than {cap} geodesics")
        if v == a:
            paths.append([a] + suffix)
            return
        for u in g.adjacency[v]:
            if dist.get(u) == dist[v] - 1:
                back(u, [v] + suffix)

    back(b, [])
    if len(paths) > cap:
        raise CapExceeded(f"more than {cap} geodesics")
    return sorted(paths)


# ---------------------------------------------------------------------------
# Ends machinery


@dataclass(frozen=True)
class ComponentReport:
    members: Tuple[str, ...]
    pseudo_unbounded: bool


def ball(g: FiniteGraphSlice, o: str, R: int) -> Set[str]:
    return {v for v, d in bfs_distances(g, o).items() if d <= R}


def components_outside_ball(
    g: FiniteGraphSlice, o: str, R: int
) -> List[ComponentReport]:
    """Connected components of the slice minus the radius-R ball.

    A component is pseudo-unbounded when it contains a truncation-boundary
    vertex; only finite truncations are available, so "unbounded" is
    necessarily approximated and reported with that caveat.
    """
    g.require(o)
    blocked = ball(g, o, R)
    seen: Set[str] = set()
    out: List[ComponentReport] = []
    for start in g.vertices:
        if start in blocked or start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.adjacency[u]:
                if v not in blocked and v not in seen:
                    seen.add(v)
                    queue.append(v)
        out.append(
            ComponentReport(
                members=tuple(sorted(comp)),
                pseudo_unbounded=any(v in g.boundary for v in comp),
            )
        )
    return sorted(out, key=lambda c: c.members)


@dataclass(frozen=True)
class CriterionReport:
    """Result of the one-ended criterion check at one radius."""

    radius: int
    sphere_radius: int
    sphere_size: int
    groups: Tuple[int, ...]  # sphere vertices per ball-complement component
    failures: Tuple[Tuple[str, str], ...]  # sample disconnected pairs

    @property
    def ok(self) -> bool:
        return not self.failures


def criterion_check(g: FiniteGraphSlice, o: str, R: int, f) -> CriterionReport:
    """Check the avoidance criterion: every pair of vertices at distance
    exactly f(R) from o must be connectable outside the radius-R ball.

    Failures list one representative pair per disconnected component pair.
    On a two-ended line this fails; on a grid or a rich curve-graph slice
    it passes.
    """
    g.require(o)
    D = f(R)
    dist = bfs_distances(g, o)
    sphere = sorted(v for v, d in dist.items() if d == D)
    comps = components_outside_ball(g, o, R)
    comp_of: Dict[str, int] = {}
    for i, comp in enumerate(comps):
        for v in comp.members:
            comp_of[v] = i
    groups: Dict[int, List[str]] = {}
    for v in sphere:
        groups.setdefault(comp_of[v], []).append(v)
    failures = []
    reps = [vs[0] for _, vs in sorted(groups.items())]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            failures.append((reps[i], reps[j]))
    return CriterionReport(
        radius=R,
        sphere_radius=D,
        sphere_size=len(sphere),
        groups=tuple(len(vs) for _, vs in sorted(groups.items())),
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# Synthetic fixtures


def line_graph(n: int) -> FiniteGraphSlice:
    """Path on n vertices; both endpoints are truncation boundary."""
    vertices = [str(i) for i in range(n)]
    adjacency = {
        str(i): [str(j) for j in (i - 1, i + 1) if 0 <= j < n] for i in range(n)
    }
    return FiniteGraphSlice(vertices, adjacency, {"0", str(n - 1)})


def grid_graph(w: int, h: int) -> FiniteGraphSlice:
    """w x h grid; the rim is truncation boundary."""
    def key(x, y):
        return f"{x},{y}"

    adjacency = {}
    boundary = set()
    for x in range(w):
        for y in range(h):
            nbrs = []
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                if 0 <= x + dx < w and 0 <= y + dy < h:
                    nbrs.append(key(x + dx, y + dy))
            adjacency[key(x, y)] = sorted(nbrs)
            if x in (0, w - 1) or y in (0, h - 1):
                boundary.add(key(x, y))
    return FiniteGraphSlice(sorted(adjacency), adjacency, boundary)
