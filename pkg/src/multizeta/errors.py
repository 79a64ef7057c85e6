"""Exception taxonomy shared by all modules.

The CLI maps DomainError (and subclasses) to exit code 2 and verification
failures to exit code 3; numeric non-convergence is a RuntimeError because it
signals a computation that started out valid but could not finish.
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """The argument coincides with (or is inside the exclusion radius of) a pole.

    ``location`` is the pole position, ``k`` the index for poles at 1/k.
    """

    def __init__(self, message: str, location: float | None = None, k: int | None = None):
        super().__init__(message)
        self.location = location
        self.k = k


class PoleInIntervalError(DomainError):
    """A scan interval contains a pole in its interior."""


class ResourceLimitError(RuntimeError):
    """A configured hard cap (table size, index bound) would be exceeded."""


class NoConvergenceError(RuntimeError):
    """An iterative refinement failed to reach its target within its budget."""
