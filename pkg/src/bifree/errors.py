"""Exception hierarchy shared by the series, transform and oracle layers."""


class BifreeError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(BifreeError, ValueError):
    """The caller supplied data violating a documented hypothesis."""


class InternalInvariantError(BifreeError, ArithmeticError):
    """An identity that holds on every valid input failed to hold."""


class KindMismatch(BifreeError, TypeError):
    """Univariate and bivariate series were mixed in one operation."""


class NotAUnit(PreconditionError):
    """Reciprocal requested of a series with vanishing constant term."""


class CompositionBase(PreconditionError):
    """Inner series of a composition has a nonzero constant term."""


class NotInvertible(PreconditionError):
    """Compositional inverse requested of a series that has none."""


class ZeroMeanError(PreconditionError):
    """A first moment that must be nonzero vanishes."""


class DegreeOverflow(PreconditionError):
    """An operator application left the monomial box of a pair model."""


class NonConvergence(BifreeError, RuntimeError):
    """Newton iteration did not reach its residual target."""


class NotDivisible(InternalInvariantError):
    """A series expected to be divisible by a monomial is not.

    ``index`` is the offending ``(p, q)`` coefficient position.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
