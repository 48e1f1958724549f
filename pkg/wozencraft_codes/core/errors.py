"""Exception hierarchy for the Wozencraft code toolkit."""
from typing import Any, Optional


class WozencraftError(Exception):
    """Base class for every error raised by wozencraft_codes."""


class NotPrimeError(WozencraftError, ValueError):
    def __init__(self, value: int) -> None:
        super().__init__(f"{value} is not prime")
        self.value = value


class OrderTooLargeError(WozencraftError, ValueError):
    def __init__(self, order: int, limit: int) -> None:
        super().__init__(f"field order {order} exceeds supported limit {limit}")
        self.order = order
        self.limit = limit


class ZeroInverseError(WozencraftError, ZeroDivisionError):
    def __init__(self) -> None:
        super().__init__("zero has no multiplicative inverse")


class FieldMismatchError(WozencraftError, ValueError):
    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"elements belong to different fields: {left} vs {right}")


class NotAUnitError(WozencraftError, ValueError):
    def __init__(self, value: Any, modulus: Any) -> None:
        super().__init__(f"{value} is not a unit modulo {modulus}")
        self.value = value


class SearchExhaustedError(WozencraftError):
    def __init__(self, q: int, k_min: int, bound: int) -> None:
        super().__init__(
            f"no prime k' in ({k_min}, {bound}] has {q} as a primitive root; "
            "raise search.artin_cap_factor"
        )
        self.bound = bound


class ContextMismatchError(WozencraftError, ValueError):
    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"ring contexts differ: {left} vs {right}")


class BadTruncationError(WozencraftError, ValueError):
    def __init__(self, m: int, k: int) -> None:
        super().__init__(f"truncation length must satisfy 0 < m <= {k}, got {m}")
        self.m = m


class NoPrimeError(WozencraftError, ValueError):
    def __init__(self, x: float) -> None:
        super().__init__(f"no prime strictly below {x}")


class BoundViolationError(WozencraftError):
    """A window count escaped the bounds of the window lemma."""

    def __init__(self, count: int, lower: float, upper: float, shift: int, window: int) -> None:
        super().__init__(
            f"window count {count} outside [{lower:.6f}, {upper:.6f}] "
            f"(shift={shift}, window={window})"
        )
        self.count = count
        self.lower = lower
        self.upper = upper


class DegreeOverflowError(WozencraftError, ValueError):
    def __init__(self, degree: int, k: int) -> None:
        super().__init__(f"Sidon element {degree} does not fit a length-{k} coefficient vector")


class BadLengthError(WozencraftError, ValueError):
    def __init__(self, got: int, expected: int, what: str = "message") -> None:
        super().__init__(f"{what} has length {got}, expected {expected}")


class RateOutOfRangeError(WozencraftError, ValueError):
    def __init__(self, rate: Any) -> None:
        super().__init__(f"rate must lie strictly between 1/2 and 1, got {rate}")


class ClaimViolationError(WozencraftError):
    """A counting claim failed on a concrete support set."""

    def __init__(self, claim: str, observed: float, bound: float, support: Optional[tuple] = None) -> None:
        detail = f" on support {support}" if support is not None else ""
        super().__init__(f"claim '{claim}' violated{detail}: observed {observed}, bound {bound}")
        self.claim = claim
        self.observed = observed
        self.bound = bound
        self.support = support


class BudgetExceededError(WozencraftError):
    def __init__(self, count: int, budget: int) -> None:
        super().__init__(f"enumeration needs {count} items, budget is {budget}")
        self.count = count
        self.budget = budget


class ParamFileError(WozencraftError, ValueError):
    """Raised when a parameter file cannot be parsed or fails validation."""
