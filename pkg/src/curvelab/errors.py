"""Exception types shared across the library."""


class CurveLabError(Exception):
    """Base class for all library errors."""


class InvalidSpec(CurveLabError):
    """A surface description violates a structural invariant."""


class StaleChunk(CurveLabError):
    """A Cantor chunk that is no longer a live leaf was used."""


class InvalidDiagram(CurveLabError):
    """A crossing diagram fails basic well-formedness."""


class NotRealizable(InvalidDiagram):
    """A crossing diagram admits no embedded drawing."""


class NotSeparating(CurveLabError):
    """Operation requires a curve separating the two maximal ends."""


class NotDisjoint(CurveLabError):
    """Operation requires a disjointly realizable pair of curves."""


class ArcDisjoint(CurveLabError):
    """A lasso arc cannot be routed so that it reaches the curve."""


class BadReference(CurveLabError):
    """A flux reference curve does not lie on a common side of the inputs."""


class NotComparable(CurveLabError):
    """Descriptors are not nested left-to-right, so the subsurface between
    them is undefined."""


class SidesMixed(CurveLabError):
    """A lasso payload straddles both sides of the target curve."""


class NotFull(CurveLabError):
    """The subsurface between the two curves misses a maximal end class
    (or required genus), so a straight geodesic is not guaranteed."""


class NoDiscreteEnd(CurveLabError):
    """The construction requires at least one discrete-type end class."""


class TargetInsideCarrier(CurveLabError):
    """A lasso-path target must lie strictly beyond the path's carrier."""


class PreconditionDistance(CurveLabError):
    """Caller-supplied distances contradict recomputable lower bounds."""


class VertexMissing(CurveLabError):
    """A vertex is not present in the finite graph slice."""


class CapExceeded(CurveLabError):
    """Geodesic enumeration hit its configured cap."""


class Exhausted(CurveLabError):
    """Universe construction exceeded its vertex budget."""


class UnknownSuite(CurveLabError):
    """No suite is registered under the requested name."""


class Degenerate(CurveLabError):
    """A polyline touches the reference line or a puncture non-transversely."""


class SearchBudgetExceeded(CurveLabError):
    """A combinatorial search exceeded its safety budget."""
