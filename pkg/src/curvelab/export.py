"""Deterministic DOT and JSON exports of graph slices."""

from __future__ import annotations

import json
from typing import Iterable, Optional

from .errors import VertexMissing
from .oracle import FiniteGraphSlice, bfs_distances


def slice_to_dot(g: FiniteGraphSlice, highlight: Iterable[str] = ()) -> str:
    """Graphviz text with canonical-key labels; byte-stable for equal input."""
    marked = set(highlight)
    lines = ["graph slice {", "  node [shape=box, fontsize=9];"]
    for v in g.vertices:
        attrs = [f'label="{v}"']
        if v in marked:
            attrs.append("style=filled")
        if v in g.boundary:
            attrs.append("color=gray")
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for v in g.vertices:
        for w in g.adjacency[v]:
            if v < w:
                lines.append(f'  "{v}" -- "{w}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def neighborhood_to_dot(g: FiniteGraphSlice, center: str, radius: int) -> str:
    """DOT of the ball of the given radius around a slice vertex."""
    if center not in g.adjacency:
        raise VertexMissing(f"vertex {center!r} is not in the slice")
    dist = bfs_distances(g, center)
    keep = {v for v, d in dist.items() if d <= radius}
    sub = FiniteGraphSlice(
        vertices=sorted(keep),
        adjacency={v: [w for w in g.adjacency[v] if w in keep] for v in sorted(keep)},
        boundary=g.boundary & keep,
    )
    return slice_to_dot(sub, highlight=[center])


def slice_to_json(g: FiniteGraphSlice) -> str:
    from .flute import diagram_to_json

    payload = {k: json.loads(diagram_to_json(d)) for k, d in g.payload.items()}
    return json.dumps(
        {
            "vertices": g.vertices,
            "adjacency": g.adjacency,
            "boundary": sorted(g.boundary),
            "payload": payload,
        }
    )


def slice_from_json(text: str) -> FiniteGraphSlice:
    from .flute import diagram_from_json

    data = json.loads(text)
    payload = {
        k: diagram_from_json(json.dumps(v)) for k, v in data.get("payload", {}).items()
    }
    return FiniteGraphSlice(
        vertices=list(data["vertices"]),
        adjacency={k: list(v) for k, v in data["adjacency"].items()},
        boundary=set(data["boundary"]),
        payload=payload,
    )
