"""Exception hierarchy.

Input problems derive from :class:`InputError` (also a ``ValueError``); the
rest signal that a mathematical invariant failed to hold.
"""


class LexstabError(Exception):
    """Base class for every error raised by this package."""


class InputError(LexstabError, ValueError):
    """Arguments outside an operation's contract."""


class ImproperCoefficients(InputError):
    """A coefficient vector has c_s != 0 for some s >= 0."""


class FitError(InputError):
    """Samples are inconsistent or do not determine every unknown."""


class EnumerationBudgetExceeded(InputError):
    """Explicit monomial enumeration would exceed the configured budget."""


class PrecisionError(InputError):
    """The requested decimal precision cannot be met."""


class InvariantViolation(LexstabError):
    """A quantity that theory forces to be valid came out invalid."""


class NegativeGeneratorCount(InvariantViolation):
    def __init__(self, degree: int, value: int):
        self.degree = degree
        self.value = value
        super().__init__(
            f"generator count in degree {degree} would be {value} < 0; "
            "the input is not the extended Hilbert function of a proper ideal"
        )


class InfeasibleDimension(InvariantViolation):
    """The target dimension is smaller than the forced multiples."""


class NotStabilized(InvariantViolation):
    """Generator counts disagree across the witness range of N."""
