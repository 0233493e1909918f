"""Exception types raised by the package."""


class BayesRealError(Exception):
    """Base class for all errors raised here."""


class InvalidDimensionError(BayesRealError, ValueError):
    """Operand dimensions are unsupported or do not match."""


class InvalidStateError(BayesRealError, ValueError):
    """A state or operator has non-finite entries or is not normalized."""


class DegenerateStateError(BayesRealError, ValueError):
    """A zero vector was given where a ray is required."""


class ZeroConditionError(BayesRealError, ValueError):
    """The conditioning event has vanishing probability."""


class InvalidParameterError(BayesRealError, ValueError):
    pass


class UnsupportedEventError(BayesRealError, ValueError):
    pass


class InvariantViolation(BayesRealError, RuntimeError):
    """A computed value left its admissible range; indicates a logic bug."""
