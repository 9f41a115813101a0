"""Exception types shared across the package."""

from __future__ import annotations


class MatchstickError(Exception):
    """Base class for all errors raised by this package."""


class NonPositive(MatchstickError, ValueError):
    def __init__(self, name: str, value: int):
        super().__init__(f"{name} must be >= 1, got {value}")
        self.value = value


class ValidationError(MatchstickError):
    """Raised by ``validate``; ``violations`` holds every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            lines += f"; ... ({more} more)"
        super().__init__(f"{len(self.violations)} violation(s): {lines}")


class NotConnected(MatchstickError):
    pass


class NotBiconnected(MatchstickError):
    pass


class HasChord(MatchstickError):
    def __init__(self, u: int, v: int):
        super().__init__(f"boundary cycle has chord ({u}, {v})")
        self.chord = (u, v)


class PreconditionFailed(MatchstickError, ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class DuplicatePoints(MatchstickError, ValueError):
    pass


class AmbiguousFloor(MatchstickError, ArithmeticError):
    def __init__(self, n: int):
        super().__init__(f"could not certify floor of the bound at n={n}")
        self.n = n


class TooLarge(MatchstickError):
    def __init__(self, work: int, limit: int):
        super().__init__(f"search space of {work} subsets exceeds limit {limit}")
        self.work = work
        self.limit = limit
