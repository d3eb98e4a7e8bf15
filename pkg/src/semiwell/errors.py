"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative solve failed to reach its tolerances.

    With the bracketed safeguard in place this indicates an internal bug or
    a pathological configuration, not ordinary numerical noise.
    """
