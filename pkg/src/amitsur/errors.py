"""Exception hierarchy shared by the toolkit."""


class AmitsurError(Exception):
    """Base class for all toolkit errors."""


class InvalidPresentation(AmitsurError, ValueError):
    pass


class MixedOwners(AmitsurError, ValueError):
    """Operands belong to different groups, rings or algebras."""


class OrderTooLarge(AmitsurError, ValueError):
    pass


class NotRightDivisibleByB(AmitsurError, ArithmeticError):
    pass


class ConductorMismatch(AmitsurError, ValueError):
    pass


class TwistNotFixed(AmitsurError, ValueError):
    pass


class ZeroInput(AmitsurError, ZeroDivisionError):
    pass


class SingularElement(AmitsurError, ArithmeticError):
    """A nonzero algebra element without an inverse, i.e. a zero divisor."""


class ClosureExceedsBound(AmitsurError, RuntimeError):
    pass


class InternalConsistencyError(AmitsurError, RuntimeError):
    """Two independent computations that must agree did not."""
