"""Exception types shared across the workbench.

Every domain failure raised by this package derives from WorkbenchError so
callers (notably the CLI) can distinguish expected domain errors from bugs.
"""


class WorkbenchError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(WorkbenchError):
    """Inversion or division of an exactly-zero value."""


class IndeterminateOrder(WorkbenchError):
    """Comparison whose difference truncated to zero inexactly."""


class InfiniteOperand(WorkbenchError):
    """Standard part requested of a value with negative leading exponent."""


class ZeroOperand(WorkbenchError):
    """Leading term requested of zero."""


class ParseError(WorkbenchError):
    """Malformed input text; carries the offset of the failure."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class PoleOrDomainError(WorkbenchError):
    """Evaluation outside a function's domain (pole, log of non-positive, ...)."""


class UnboundVariable(WorkbenchError):
    """Expression uses a variable the bindings do not supply."""


class NonAlgebraicInput(WorkbenchError):
    """An algebraic-only procedure received a transcendental node."""


class ZeroDifference(WorkbenchError):
    """Shifted and original expressions are identical (constant input)."""


class VerticalTangent(WorkbenchError):
    """Subtangent is infinite (zero slope at a point off the axis)."""


class Divergent(WorkbenchError):
    """Sequence value at the infinite index is infinite."""


class NotSupported(WorkbenchError):
    """Term cannot be evaluated at an infinite index by this procedure."""


class PrecisionExhausted(WorkbenchError):
    """Requested tolerance is unreachable at the working precision."""


class WindowTooSmall(WorkbenchError):
    """Truncation window cannot hold the requested computation."""


class NonFiniteQuotient(WorkbenchError):
    """Difference quotient is infinite (vertical tangent)."""


class FlatPoint(WorkbenchError):
    """Curvature undefined: the infinitely close normals do not meet finitely."""


class NoSignChange(WorkbenchError):
    """Root bracket does not exhibit a sign change."""
