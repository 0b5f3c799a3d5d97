"""Exception types shared across the package."""


class WeightGraphError(Exception):
    """Base class for all errors raised by weightgraph."""


class InputError(WeightGraphError, ValueError):
    """Malformed input: bad vertex index, bad file line, inconsistent data."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(WeightGraphError, ValueError):
    """Request exceeds a fixed size ceiling (canonical labeling, enumeration)."""


class DomainError(WeightGraphError, ValueError):
    """Argument outside the domain on which a function is defined."""


class RepeatedWeights(WeightGraphError, ValueError):
    """Two basis vectors carry the same weight, so some weight space is not one-dimensional."""

    def __init__(self, pairs):
        self.pairs = list(pairs)
        desc = ", ".join(f"{i}={j}" for i, j in self.pairs)
        super().__init__(f"repeated weights at indices {desc}")
