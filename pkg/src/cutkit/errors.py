"""Exception types shared across the package."""


class CutkitError(Exception):
    """Base class for all package-specific errors."""


class EndpointOutOfRange(CutkitError):
    """An edge endpoint is negative or not below the vertex count."""


class SelfLoop(CutkitError):
    """An input edge joins a vertex to itself."""


class SizeMismatch(CutkitError):
    """Two values that must agree on vertex count do not."""


class SameVertex(CutkitError):
    """An operation on a vertex pair received the same vertex twice."""


class TooFewVertices(CutkitError):
    """The graph has fewer vertices than the operation supports."""


class TooManyVertices(CutkitError):
    """The graph has more vertices than exhaustive enumeration supports."""


class EdgeOutOfRange(CutkitError):
    """An edge id is negative or not below the edge count."""


class LevelOutOfRange(CutkitError):
    """A requested reconstruction level does not exist in the trace."""


class IterationCapExceeded(CutkitError):
    """The sparsifier's level loop ran past its configured iteration cap."""


class InvalidSpec(CutkitError):
    """A generator spec names an unknown family or has bad parameters."""


class EdgeListFormatError(CutkitError):
    """An edge-list document violates the text format."""


class InvariantViolation(CutkitError):
    """A structural self-check on a finished run failed; signals a logic fault."""
