class SparseTropError(Exception):
    """Base class for errors raised by sparsetrop."""


class DimensionMismatch(SparseTropError, ValueError):
    pass


class IntegralityViolation(SparseTropError, ArithmeticError):
    """A quantity that must be an integer came out fractional.

    Usually means a user-supplied degree (deg_f, deg_rho) is wrong.
    """


class NotInTropicalization(SparseTropError, ValueError):
    """The query point lies outside every cone."""


class NotRegular(SparseTropError, ValueError):
    """The query point is not a regular point of a maximal cone."""


class InvariantViolation(SparseTropError, AssertionError):
    """Two quantities that must agree do not."""
