"""Exception types shared across the package."""


class StateDiscriminationError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(StateDiscriminationError):
    """Matrix expected to be Hermitian deviates beyond tolerance."""


class NumericalFailure(StateDiscriminationError):
    """An iterative numerical routine did not converge."""


class SingularInput(StateDiscriminationError):
    """Numerically singular matrix met a scalar map that is singular at zero."""


class ZeroCoefficient(StateDiscriminationError):
    """Symmetric-ensemble coefficients must be strictly positive reals."""


class BadLength(StateDiscriminationError):
    """Sequence has the wrong number of entries."""


class OutOfRange(StateDiscriminationError):
    """Scalar argument outside its documented range."""


class DimensionMismatch(StateDiscriminationError):
    """Operands live in different dimensions or their counts disagree."""


class SingularFrame(StateDiscriminationError):
    """Frame operator is numerically singular on the span of the states."""


class InfeasibleConfig(StateDiscriminationError):
    """Extremal-family configuration admits no valid coefficient vector."""


class LinearlyDependent(StateDiscriminationError):
    """Operation requires a linearly independent set of states."""


class NonConvergence(StateDiscriminationError):
    """Optimizer could not locate a feasible point at all."""


class InvariantViolation(StateDiscriminationError):
    """A value-type invariant failed at construction."""


class FormatError(StateDiscriminationError):
    """Input file does not match the documented schema."""
