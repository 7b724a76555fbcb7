"""Exception hierarchy shared by all modules."""


class SkeinforgeError(Exception):
    """Base class for errors raised by this package."""


class CycZeroDivisionError(SkeinforgeError, ZeroDivisionError):
    """Division by zero in the cyclotomic field."""


class VariableMismatchError(SkeinforgeError, ValueError):
    """Laurent polynomials over different variable names were combined."""


class ZeroSubstitutionError(SkeinforgeError, ZeroDivisionError):
    """A Laurent polynomial with negative exponents was evaluated at zero."""


class NonDivisibleError(SkeinforgeError, ArithmeticError):
    """A fraction does not clear to a Laurent polynomial."""


class ParseError(SkeinforgeError, ValueError):
    """Malformed diagram or braid input."""


class OrientationError(ParseError):
    """PD crossings admit no consistent orientation."""


class EngineError(SkeinforgeError):
    """Failure inside the skein engine."""


class EmptyLinkError(EngineError, ValueError):
    """The empty link (zero components) has no invariant value."""


class MemoCapacityError(EngineError, MemoryError):
    """The memo table grew past its configured capacity."""


class FusionError(SkeinforgeError):
    """Base class for fusion-ring failures."""


class UnsupportedNError(FusionError, ValueError):
    """N outside the modelled range."""


class NonIntegralError(UnsupportedNError):
    """N does not give an integral metaplectic category."""


class ClosureMismatchError(FusionError):
    """A fusion closure differs from the listed generating set."""


class DimensionIdentityError(FusionError):
    """dim(L) * dim(centralizer) != dim(C)."""


class GradingMismatchError(FusionError):
    """Computed grading components disagree with the expected lists."""


class ShapeMismatchError(FusionError, ValueError):
    """Modular data arrays have inconsistent sizes."""
