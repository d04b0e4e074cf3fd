"""Certified paths in the translatable curve graph.

A certified path carries, besides its vertices, one adjacency witness per
edge and one distance certificate per vertex.  The witnesses are
recomputable edge proofs: on the flute, the subsurface between consecutive
curves is an annulus with exactly one puncture; in the general model, the
payload of the connecting lasso step matches a catalogue piece.  The
certificates are lower bounds on the graph distance to a fixed origin,
each verifiable by the flux and Hamming pseudometrics alone:

- ``flux_lb`` / ``hamming_lb``: the pseudometric value itself, recomputed
  from the vertex (both are sound lower bounds for the graph distance);
- ``triangle_lb``: anchor_lb - steps, where the anchor is another path
  vertex whose distance to the origin is either caller-supplied or itself
  certified, and steps is the number of path edges to the anchor.

The detour constructors realize the one-endedness arguments: given curves
a and b at caller-supplied distance 3R (flute) or 6R (general) from an
origin o, they build a path from a to b every vertex of which is certified
to lie strictly outside the ball of radius R around o.  The route: push b
beyond everything by translations (flux grows along the push), connect by
a straight geodesic, then iterate lasso paths to pump the whole geodesic
far from the origin, keeping the iteration endpoints as rungs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .descriptors import (
    RIGHT_SIDE,
    AdjacencyWitness,
    CurveDescriptor,
    GeneralLasso,
    apply_lasso,
    assert_nested,
    base_curve,
    between_profile,
    descriptor_from_json,
    descriptor_to_json,
    is_full,
    translate_descriptor,
    verify_witness,
)
from .errors import (
    NoDiscreteEnd,
    NotComparable,
    NotDisjoint,
    NotFull,
    PreconditionDistance,
    TargetInsideCarrier,
)
from .flute import (
    ABOVE,
    BELOW,
    CrossingDiagram,
    LassoArc,
    canonicalize,
    diagram_from_json,
    diagram_to_json,
    disjointly_realizable,
    is_standard_circle,
    joint_carrier,
    lasso,
    punctures_between,
    standard_circle,
    translate,
)
from .metrics import DescriptorMetrics, FluteMetrics, MetricContext, NEUTRAL, LEFT
from .surface import GENUS_FINITE, ValidatedSpec, piece_catalogue

FLUX_LB = "flux_lb"
HAMMING_LB = "hamming_lb"
TRIANGLE_LB = "triangle_lb"


@dataclass(frozen=True)
class Certificate:
    kind: str
    value: int
    anchor: Optional[int] = None  # path index of the anchor vertex
    anchor_lb: Optional[int] = None
    steps: Optional[int] = None


@dataclass(frozen=True)
class EdgeWitness:
    """Flute edges carry the single puncture of the annulus between the
    endpoints; general edges carry the piece-matching lasso payload."""

    kind: str  # "annulus" | "piece"
    puncture: Optional[int] = None
    witness: Optional[AdjacencyWitness] = None


@dataclass(frozen=True)
class CertifiedPath:
    model: str  # "flute" | "general"
    vertices: Tuple
    edges: Tuple[EdgeWitness, ...]
    certs: Tuple[Optional[Certificate], ...]
    assumptions: Tuple[Tuple[int, int], ...] = ()  # (vertex index, trusted d(v, o))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _metric_for(path_or_vertex, model: str) -> MetricContext:
    if model == "flute":
        return FluteMetrics()
    vspec = path_or_vertex.vspec
    return DescriptorMetrics(vspec)


# ---------------------------------------------------------------------------
# Straight paths


def straight_path_flute(a: CrossingDiagram, b: CrossingDiagram) -> CertifiedPath:
    """A geodesic of disjoint curves from a to b, one lasso per puncture.

    Requires b disjoint from and right of a; the path has length exactly
    flux(a, b) and every edge is witnessed by its annulus puncture.
    """
    a, b = canonicalize(a), canonicalize(b)
    if not disjointly_realizable(a, b):
        raise NotDisjoint("straight paths require disjoint endpoints")
    from .flute.ops import puncture_partition

    pa, pb = puncture_partition(a), puncture_partition(b)
    if not pb.issubset(pa):
        raise NotComparable("b must lie on the right side of a")
    between = sorted(pa.symmetric_difference(pb))
    vertices: List[CrossingDiagram] = [a]
    edges: List[EdgeWitness] = []
    for idx, p in enumerate(between):
        last = idx == len(between) - 1
        if last:
            nxt = b
        else:
            nxt = _next_straight_vertex(vertices[-1], p, b)
        assert punctures_between(vertices[-1], nxt) == frozenset({p})
        vertices.append(nxt)
        edges.append(EdgeWitness("annulus", puncture=p))
    if not between:
        assert a == b
    return CertifiedPath("flute", tuple(vertices), tuple(edges), (None,) * len(vertices))


def _next_straight_vertex(cur, p, b):
    for side in (ABOVE, BELOW):
        cand = lasso(cur, LassoArc(p, side=side))
        try:
            if disjointly_realizable(cand, b):
                return cand
        except NotDisjoint:
            continue
    raise NotDisjoint(
        f"no straight step through puncture {p} stays disjoint from the target"
    )


def straight_path_general(
    a: CurveDescriptor, b: CurveDescriptor
) -> CertifiedPath:
    """A witnessed geodesic between nested descriptors with [a, b] full.

    Replays the full-subsurface decomposition: the ends between the curves
    split into one catalogue-piece payload per step, discrete steps first,
    then genus steps; the path length is exactly p + g.
    """
    order = assert_nested(a, b)
    if order == "left":
        raise NotComparable("b must lie on the right side of a")
    if order == "equal":
        return CertifiedPath("general", (a,), (), (None,))
    if not is_full(a, b):
        raise NotFull("straight geodesics need the subsurface between to be full")
    vspec = a.vspec
    prof = between_profile(a, b)
    p = prof.discrete_count()
    g = prof.genus_delta if vspec.genus_mode == GENUS_FINITE else 0
    total = p + g
    # split the Cantor mass between the curves into `total` payload groups
    groups: List[List] = [[] for _ in range(total)]
    for cls in range(1, vspec.n_cantor + 1):
        atoms = [(c, path) for (kc, c, path) in prof.cantor_atoms if kc == cls]
        while len(atoms) < total:
            c, path = atoms.pop()
            atoms.extend([(c, path + "0"), (c, path + "1")])
        atoms.sort()
        share = len(atoms) // total
        extra = len(atoms) % total
        at = 0
        for j in range(total):
            take = share + (1 if j < extra else 0)
            from .surface import CantorChunk

            groups[j].extend(CantorChunk(cls, c, path) for c, path in atoms[at : at + take])
            at += take
    pieces = piece_catalogue(vspec)
    vertices: List[CurveDescriptor] = [a]
    edges: List[EdgeWitness] = []
    for j in range(total):
        if j < p:
            cls, copy = prof.slots[j]
            payload = GeneralLasso(
                slots=frozenset({(cls, copy)}),
                chunks=tuple(groups[j]),
                genus=pieces[cls - 1].genus,
                side=RIGHT_SIDE,
            )
        else:
            payload = GeneralLasso(
                slots=frozenset(),
                chunks=tuple(groups[j]),
                genus=1,
                side=RIGHT_SIDE,
            )
        nxt, witness = apply_lasso(vertices[-1], payload)
        assert witness is not None
        vertices.append(nxt)
        edges.append(EdgeWitness("piece", witness=witness))
    assert vertices[-1] == b, "straight construction must land on the target"
    vertices[-1] = b  # keep the caller's trace on the endpoint
    return CertifiedPath("general", tuple(vertices), tuple(edges), (None,) * len(vertices))


# ---------------------------------------------------------------------------
# Lasso paths


def lasso_path_flute(path: CertifiedPath, target: int, side: str = ABOVE) -> CertifiedPath:
    """Apply one lasso with a common arc corridor to every path vertex.

    The target puncture must lie strictly beyond the carrier of the path;
    the image is again a straight path of the same length, and each image
    vertex is a neighbor of its original (the rung edges).
    """
    carrier = joint_carrier(*path.vertices)
    if carrier.contains_puncture(target):
        raise TargetInsideCarrier(f"puncture {target} lies inside the carrier")
    new_vertices = tuple(lasso(v, LassoArc(target, side=side)) for v in path.vertices)
    for u, v, e in zip(new_vertices, new_vertices[1:], path.edges):
        assert punctures_between(u, v) == frozenset({e.puncture})
    return CertifiedPath(
        "flute", new_vertices, path.edges, (None,) * len(new_vertices)
    )


def lasso_path_general(path: CertifiedPath, payload: GeneralLasso) -> CertifiedPath:
    """General analogue: pull the same piece payload across every vertex."""
    new_vertices = []
    for v in path.vertices:
        nxt, witness = apply_lasso(v, payload)
        if witness is None:
            raise TargetInsideCarrier("lasso payload must match a catalogue piece")
        new_vertices.append(nxt)
    return CertifiedPath(
        "general", tuple(new_vertices), path.edges, (None,) * len(new_vertices)
    )


# ---------------------------------------------------------------------------
# Certificates


def _best_certificate(
    metric: MetricContext,
    vertex,
    idx: int,
    o,
    anchors: Dict[int, int],
    floor: int,
) -> Certificate:
    """The strongest available certificate for one vertex; must beat floor."""
    h = metric.hamming(vertex, o)
    f = metric.flux(vertex, o).total
    best = Certificate(HAMMING_LB, h)
    if f > best.value:
        best = Certificate(FLUX_LB, f)
    for anchor_idx, anchor_lb in anchors.items():
        steps = abs(idx - anchor_idx)
        value = anchor_lb - steps
        if value > best.value:
            best = Certificate(TRIANGLE_LB, value, anchor_idx, anchor_lb, steps)
    if best.value <= floor:
        raise PreconditionDistance(
            f"no certificate places vertex {idx} outside the {floor}-ball"
        )
    return best


# ---------------------------------------------------------------------------
# Detours


def detour_flute(
    o: CrossingDiagram,
    a: CrossingDiagram,
    b: CrossingDiagram,
    R: int,
    claimed: Optional[Tuple[int, int]] = None,
) -> CertifiedPath:
    """A certified path from a to b avoiding the radius-R ball around o.

    The caller supplies (or defaults to) d(a, o) = d(b, o) = 3R; the claims
    are cross-checked against the recomputable lower bounds.  b must be a
    standard circle.  The construction follows the one-endedness argument:
    decide the flux side of b, push it beyond everything by translations,
    take the straight geodesic from a, and iterate D + 2R lasso paths,
    where D is the largest flux from o to a geodesic vertex.
    """
    if R < 1:
        raise PreconditionDistance("R must be a positive integer")
    o, a, b = canonicalize(o), canonicalize(a), canonicalize(b)
    j = is_standard_circle(b)
    if j is None:
        raise PreconditionDistance("b must be a translate of a standard circle")
    d_a, d_b = claimed if claimed is not None else (3 * R, 3 * R)
    metric = FluteMetrics()
    for name, v, claim in (("a", a, d_a), ("b", b, d_b)):
        lb = max(metric.hamming(v, o), metric.flux(v, o).total)
        if lb > claim:
            raise PreconditionDistance(
                f"claimed d({name}, o) = {claim} is below the certified bound {lb}"
            )

    # degenerate case: both endpoints standard and joined by a short
    # translation path, which stays outside the ball by the triangle bound
    i = is_standard_circle(a)
    if i is not None and abs(i - j) <= R:
        step = 1 if j >= i else -1
        vertices = tuple(standard_circle(n) for n in range(i, j + step, step) or [i])
        if not vertices:
            vertices = (a,)
        edges = tuple(
            EdgeWitness("annulus", puncture=max(n, m))
            for n, m in zip(range(i, j, step), range(i + step, j + step, step))
        )
        anchors = {0: d_a, len(vertices) - 1: d_b}
        certs = tuple(
            _best_certificate(metric, v, k, o, anchors, R)
            for k, v in enumerate(vertices)
        )
        return CertifiedPath("flute", vertices, edges, certs, ((0, d_a), (len(vertices) - 1, d_b)))

    side = metric.flux_side(o, b)
    direction = -1 if side == LEFT else 1
    gaps = set(o.gaps()) | set(a.gaps()) | set(b.gaps())
    if direction > 0:
        m = max(gaps) + 1
        k = m - j
    else:
        m = min(gaps) - 1
        k = j - m
    push = [translate(b, direction * t) for t in range(k + 1)]  # b .. beta'
    beta = push[-1]

    leg = (
        straight_path_flute(a, beta) if direction > 0 else straight_path_flute(beta, a)
    )
    D = max(metric.flux(o, v).total for v in leg.vertices)

    rung_targets: List[int] = []
    cur = leg
    left_rungs = [cur.vertices[0]]
    right_rungs = [cur.vertices[-1]]
    for _ in range(D + 2 * R):
        p = max(g for v in list(cur.vertices) + [o] for g in v.gaps()) + 2
        cur = lasso_path_flute(cur, p, ABOVE)
        rung_targets.append(p)
        left_rungs.append(cur.vertices[0])
        right_rungs.append(cur.vertices[-1])

    # assemble a -> (rungs) -> final geodesic -> (rungs) -> beta' -> ... -> b
    vertices: List[CrossingDiagram] = []
    edges: List[EdgeWitness] = []
    if direction > 0:
        a_rungs, b_rungs = left_rungs, right_rungs
        final_vertices = list(cur.vertices)
        final_edges = list(cur.edges)
    else:
        a_rungs, b_rungs = right_rungs, left_rungs
        final_vertices = list(reversed(cur.vertices))
        final_edges = list(reversed(cur.edges))
    vertices.extend(a_rungs)
    edges.extend(EdgeWitness("annulus", puncture=p) for p in rung_targets)
    vertices.extend(final_vertices[1:])
    edges.extend(final_edges)
    vertices.extend(reversed(b_rungs[:-1]))
    edges.extend(
        EdgeWitness("annulus", puncture=p) for p in reversed(rung_targets)
    )
    for t in range(k, 0, -1):
        vertices.append(push[t - 1])
        edges.append(
            EdgeWitness(
                "annulus",
                puncture=max(j + direction * t, j + direction * (t - 1)),
            )
        )
    assert vertices[0] == a and vertices[-1] == b
    anchors = {0: d_a, len(vertices) - 1: d_b}
    certs = tuple(
        _best_certificate(metric, v, idxv, o, anchors, R)
        for idxv, v in enumerate(vertices)
    )
    return CertifiedPath(
        "flute",
        tuple(vertices),
        tuple(edges),
        certs,
        ((0, d_a), (len(vertices) - 1, d_b)),
    )


def detour_general(
    o: CurveDescriptor,
    a: CurveDescriptor,
    b: CurveDescriptor,
    R: int,
    claimed: Optional[Tuple[int, int]] = None,
) -> CertifiedPath:
    """General-model detour: a certified path from a to b avoiding B(o, R).

    Requires at least one discrete end class, b a base-curve translate, and
    caller-supplied d(a, o) = d(b, o) = 6R.  b is pushed along the
    translation (through straight geodesic legs, since consecutive base
    curves need not be adjacent in the finite-genus case) until the
    subsurface to a is full and b's own certified bound reaches 3R; then 2R
    lasso-path iterations with a fresh piece payload per round pump the
    geodesic's Hamming distance from o.  Inputs must carry no winding
    marks: wound descriptors cannot terminate a straight construction.
    """
    vspec = o.vspec
    if vspec.n_discrete == 0:
        raise NoDiscreteEnd("the detour construction needs a discrete end class")
    if R < 1:
        raise PreconditionDistance("R must be a positive integer")
    if a.winding_marks or b.winding_marks or o.winding_marks:
        raise NotComparable("detour inputs must not carry winding marks")
    j = b.discrete[0].threshold - 1
    if b != base_curve(vspec, j):
        raise PreconditionDistance("b must be a translate of a base curve")
    d_a, d_b = claimed if claimed is not None else (6 * R, 6 * R)
    metric = DescriptorMetrics(vspec)
    for name, v, claim in (("a", a, d_a), ("b", b, d_b)):
        lb = max(metric.hamming(v, o), metric.flux(v, o).total)
        if lb > claim:
            raise PreconditionDistance(
                f"claimed d({name}, o) = {claim} is below the certified bound {lb}"
            )

    side = metric.flux_side(o, b)
    direction = -1 if side == LEFT else 1
    lo = min(x.support()[0] for x in (o, a, b))
    hi = max(x.support()[1] for x in (o, a, b))
    k = 1
    while True:
        target_copy = (hi + k) if direction > 0 else (lo - k)
        beta = base_curve(vspec, target_copy)
        far_enough = max(metric.hamming(beta, o), metric.flux(beta, o).total) >= 3 * R
        try:
            full = is_full(a, beta) if direction > 0 else is_full(beta, a)
        except NotComparable:
            full = False
        if far_enough and full:
            break
        k += 1
        if k > hi - lo + 12 * R + 8:
            raise PreconditionDistance("push failed to reach a full configuration")

    push_leg = (
        straight_path_general(b, beta)
        if direction > 0
        else straight_path_general(beta, b)
    )
    leg = (
        straight_path_general(a, beta)
        if direction > 0
        else straight_path_general(beta, a)
    )

    pieces = piece_catalogue(vspec)
    cur = leg
    left_rungs = [cur.vertices[0]]
    right_rungs = [cur.vertices[-1]]
    rung_witnesses: List[AdjacencyWitness] = []
    support_hi = max(
        [v.support()[1] for v in cur.vertices] + [o.support()[1], beta.support()[1]]
    )
    from .surface import CantorChunk

    for t in range(2 * R):
        copy = support_hi + 1 + t
        payload = GeneralLasso(
            slots=frozenset({(1, copy)}),
            chunks=tuple(CantorChunk(cls, copy, "") for cls in range(1, vspec.n_cantor + 1)),
            genus=pieces[0].genus,
            side=RIGHT_SIDE,
        )
        cur = lasso_path_general(cur, payload)
        rung_witnesses.append(
            AdjacencyWitness(
                piece=pieces[0],
                slots=payload.slots,
                chunk_nodes=tuple(
                    (c.cantor_class, c.copy, c.path) for c in payload.chunks
                ),
                genus=payload.genus,
                side=RIGHT_SIDE,
            )
        )
        left_rungs.append(cur.vertices[0])
        right_rungs.append(cur.vertices[-1])

    vertices: List[CurveDescriptor] = []
    edges: List[EdgeWitness] = []
    if direction > 0:
        a_rungs, b_rungs = left_rungs, right_rungs
        final_vertices = list(cur.vertices)
        final_edges = list(cur.edges)
        push_vertices = list(reversed(push_leg.vertices))
        push_edges = list(reversed(push_leg.edges))
    else:
        a_rungs, b_rungs = right_rungs, left_rungs
        final_vertices = list(reversed(cur.vertices))
        final_edges = list(reversed(cur.edges))
        push_vertices = list(push_leg.vertices)
        push_edges = list(push_leg.edges)
    vertices.extend(a_rungs)
    edges.extend(EdgeWitness("piece", witness=w) for w in rung_witnesses)
    vertices.extend(final_vertices[1:])
    edges.extend(final_edges)
    vertices.extend(reversed(b_rungs[:-1]))
    edges.extend(EdgeWitness("piece", witness=w) for w in reversed(rung_witnesses))
    vertices.extend(push_vertices[1:])
    edges.extend(push_edges)
    assert vertices[0] == a and vertices[-1] == b
    anchors = {0: d_a, len(vertices) - 1: d_b}
    certs = tuple(
        _best_certificate(metric, v, idxv, o, anchors, R)
        for idxv, v in enumerate(vertices)
    )
    return CertifiedPath(
        "general",
        tuple(vertices),
        tuple(edges),
        certs,
        ((0, d_a), (len(vertices) - 1, d_b)),
    )


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    checks: Tuple[Tuple[str, bool, str], ...]

    def failures(self) -> List[Tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]


def verify_path(path: CertifiedPath, o, R: int) -> VerificationReport:
    """Recompute every edge witness and certificate of a path.

    Returns an itemized report; the path is accepted iff every consecutive
    pair is adjacent per its witness and every vertex carries a certificate
    whose recomputed bound exceeds R.  Soundness: flux and Hamming bound
    the graph distance from below, and a triangle certificate only ever
    discounts a trusted or certified anchor bound by the number of path
    edges to the anchor.
    """
    metric = _metric_for(o, path.model)
    checks: List[Tuple[str, bool, str]] = []
    assumptions = dict(path.assumptions)
    n = len(path.vertices)
    ok_edges = len(path.edges) == n - 1
    checks.append(("shape", ok_edges, f"{n} vertices, {len(path.edges)} edges"))
    for i, edge in enumerate(path.edges):
        u, v = path.vertices[i], path.vertices[i + 1]
        if path.model == "flute":
            if edge.kind != "annulus" or edge.puncture is None:
                checks.append((f"edge[{i}]", False, "missing annulus witness"))
                continue
            try:
                between = punctures_between(u, v)
                good = between == frozenset({edge.puncture})
                detail = f"punctures between = {sorted(between)}"
            except NotDisjoint:
                good, detail = False, "endpoints not disjoint"
        else:
            if edge.kind != "piece" or edge.witness is None:
                checks.append((f"edge[{i}]", False, "missing piece witness"))
                continue
            good = verify_witness(u, v, edge.witness) or verify_witness(
                v, u, edge.witness
            )
            detail = f"piece T_{edge.witness.piece.id}"
        checks.append((f"edge[{i}]", good, detail))
    for i, cert in enumerate(path.certs):
        v = path.vertices[i]
        if cert is None:
            checks.append((f"cert[{i}]", False, "vertex carries no certificate"))
            continue
        if cert.kind == FLUX_LB:
            val = metric.flux(v, o).total
            good = val == cert.value and cert.value > R
            detail = f"flux = {val}, claimed {cert.value}"
        elif cert.kind == HAMMING_LB:
            val = metric.hamming(v, o)
            good = val == cert.value and cert.value > R
            detail = f"hamming = {val}, claimed {cert.value}"
        elif cert.kind == TRIANGLE_LB:
            good = True
            detail = f"anchor {cert.anchor} lb {cert.anchor_lb} - {cert.steps} steps"
            if cert.anchor is None or not 0 <= cert.anchor < n:
                good, detail = False, "anchor index out of range"
            else:
                anchor_v = path.vertices[cert.anchor]
                trusted = assumptions.get(cert.anchor)
                anchor_bound = max(
                    metric.hamming(anchor_v, o), metric.flux(anchor_v, o).total
                )
                if trusted is not None:
                    anchor_bound = max(anchor_bound, trusted)
                if cert.anchor_lb > anchor_bound:
                    good, detail = False, (
                        f"anchor lb {cert.anchor_lb} not justified (max {anchor_bound})"
                    )
                elif cert.steps != abs(i - cert.anchor):
                    good, detail = False, "steps do not match path positions"
                elif cert.value != cert.anchor_lb - cert.steps:
                    good, detail = False, "triangle arithmetic is wrong"
                elif cert.value <= R:
                    good, detail = False, f"bound {cert.value} <= R"
        else:
            good, detail = False, f"unknown certificate kind {cert.kind!r}"
        checks.append((f"cert[{i}]", good, detail))
    return VerificationReport(all(c[1] for c in checks), tuple(checks))


# ---------------------------------------------------------------------------
# JSON


def path_to_json(path: CertifiedPath) -> str:
    def vertex_json(v):
        if path.model == "flute":
            return json.loads(diagram_to_json(v))
        return json.loads(descriptor_to_json(v))

    def edge_json(e: EdgeWitness):
        if e.kind == "annulus":
            return {"kind": e.kind, "puncture": e.puncture}
        w = e.witness
        return {
            "kind": e.kind,
            "piece": w.piece.id,
            "slots": sorted(list(s) for s in w.slots),
            "chunks": [list(c) for c in w.chunk_nodes],
            "genus": w.genus,
            "side": w.side,
        }

    def cert_json(c: Optional[Certificate]):
        if c is None:
            return None
        return {
            "kind": c.kind,
            "value": c.value,
            "anchor": c.anchor,
            "anchor_lb": c.anchor_lb,
            "steps": c.steps,
        }

    return json.dumps(
        {
            "model": path.model,
            "vertices": [vertex_json(v) for v in path.vertices],
            "edges": [edge_json(e) for e in path.edges],
            "certs": [cert_json(c) for c in path.certs],
            "assumptions": [list(x) for x in path.assumptions],
        }
    )


def path_from_json(text: str) -> CertifiedPath:
    data = json.loads(text)
    model = data["model"]
    if model == "flute":
        vertices = tuple(diagram_from_json(json.dumps(v)) for v in data["vertices"])
    else:
        vertices = tuple(
            descriptor_from_json(json.dumps(v)) for v in data["vertices"]
        )
    edges = []
    for e in data["edges"]:
        if e["kind"] == "annulus":
            edges.append(EdgeWitness("annulus", puncture=e["puncture"]))
        else:
            vspec = vertices[0].vspec
            piece = piece_catalogue(vspec)[e["piece"] - 1]
            edges.append(
                EdgeWitness(
                    "piece",
                    witness=AdjacencyWitness(
                        piece=piece,
                        slots=frozenset((int(c), int(i)) for c, i in e["slots"]),
                        chunk_nodes=tuple(
                            (int(c), int(i), str(p)) for c, i, p in e["chunks"]
                        ),
                        genus=e["genus"] if e["genus"] == "infinite" else int(e["genus"]),
                        side=e["side"],
                    ),
                )
            )
    certs = tuple(
        None
        if c is None
        else Certificate(c["kind"], c["value"], c["anchor"], c["anchor_lb"], c["steps"])
        for c in data["certs"]
    )
    assumptions = tuple((int(i), int(v)) for i, v in data["assumptions"])
    return CertifiedPath(model, vertices, tuple(edges), certs, assumptions)
