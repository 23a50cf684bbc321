"""Exception hierarchy.

Every domain failure raises a subclass of :class:`GeometryError`.  The
``code`` attribute is the machine-readable name used by the command line
front end.
"""


class GeometryError(Exception):
    code = "GeometryError"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


class DimensionMismatch(GeometryError):
    code = "DimensionMismatch"


class EmptyPolyhedron(GeometryError):
    code = "EmptyPolyhedron"


class DimensionCapExceeded(GeometryError):
    code = "DimensionCapExceeded"


class KernelNotInLineality(GeometryError):
    code = "KernelNotInLineality"


class RayInsideCone(GeometryError):
    code = "RayInsideCone"


class PointNotInBody(GeometryError):
    code = "PointNotInBody"


class ConeMismatch(GeometryError):
    code = "ConeMismatch"


class NegativeOffset(GeometryError):
    code = "NegativeOffset"


class BudgetExceeded(GeometryError):
    code = "BudgetExceeded"


class PointInsideBody(GeometryError):
    code = "PointInsideBody"

    def __init__(self, index, message=""):
        super().__init__(message or f"point {index} lies inside the body", index=index)
        self.index = index


class SegmentMissesBody(GeometryError):
    code = "SegmentMissesBody"

    def __init__(self, i, j, message=""):
        super().__init__(message or f"segment [{i}, {j}] misses the body", pair=[i, j])
        self.pair = (i, j)


class DegenerateDecomposition(GeometryError):
    code = "DegenerateDecomposition"


class NotHidden(GeometryError):
    code = "NotHidden"


class LiftInfeasible(GeometryError):
    code = "LiftInfeasible"


class BadConeShape(GeometryError):
    code = "BadConeShape"


class PreconditionUnsatisfied(GeometryError):
    code = "PreconditionUnsatisfied"


class DimensionExhausted(GeometryError):
    code = "DimensionExhausted"


class UnboundedBody(GeometryError):
    code = "UnboundedBody"


class GridTooCoarse(GeometryError):
    code = "GridTooCoarse"


class UnsupportedBody(GeometryError):
    code = "UnsupportedBody"


class UnsupportedDimension(GeometryError):
    code = "UnsupportedDimension"


class InvalidInput(GeometryError, ValueError):
    code = "InvalidInput"
