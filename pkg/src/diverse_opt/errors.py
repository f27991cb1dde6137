"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input text. ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NegativeWeightError(ValueError):
    """An element weight was negative; the copy-weight reduction needs w >= 0."""


class WeightBoundError(ValueError):
    """k^2 * sum(w) would overflow signed 64-bit accumulation."""


class InfeasibleError(Exception):
    """The instance has no solution (unreachable sink, flow requirement too large).

    ``achieved`` carries the best value reached, e.g. the max flow value.
    """

    def __init__(self, message, achieved=None):
        self.achieved = achieved
        super().__init__(message)
