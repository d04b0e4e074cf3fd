"""Curves on the bi-infinite flute: diagrams, lassos, geometry oracle."""

from .diagram import (
    DOWN,
    UP,
    CrossingDiagram,
    canonicalize,
    diagram,
    diagram_from_json,
    diagram_to_json,
    is_standard_circle,
    standard_circle,
    translate,
    validate_diagram,
    winding,
)
from .geometry import PolylineCurve, geometry_oracle, realize
from .ops import (
    ABOVE,
    BELOW,
    Carrier,
    LassoArc,
    are_neighbors,
    disjointly_realizable,
    enumerate_neighbors,
    forget_puncture,
    is_separating,
    joint_carrier,
    lasso,
    puncture_partition,
    punctures_between,
)

__all__ = [
    "ABOVE",
    "BELOW",
    "Carrier",
    "CrossingDiagram",
    "DOWN",
    "LassoArc",
    "PolylineCurve",
    "UP",
    "are_neighbors",
    "canonicalize",
    "diagram",
    "diagram_from_json",
    "diagram_to_json",
    "disjointly_realizable",
    "enumerate_neighbors",
    "forget_puncture",
    "geometry_oracle",
    "is_separating",
    "is_standard_circle",
    "joint_carrier",
    "lasso",
    "puncture_partition",
    "punctures_between",
    "realize",
    "standard_circle",
    "translate",
    "validate_diagram",
    "winding",
]
