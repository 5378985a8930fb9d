"""Exception types shared across the package."""

from __future__ import annotations


class PwltcError(Exception):
    """Base class for package errors."""


class DomainError(PwltcError, ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class ContractViolationError(PwltcError, ValueError):
    """Caller broke an operation precondition (e.g. wrong zone label)."""


class StepBudgetError(PwltcError, RuntimeError):
    """Event-driven propagation exceeded its segment budget.

    Carries the partial trajectory accumulated so far in ``partial``.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ConvergenceError(PwltcError, RuntimeError):
    """Iterative solve failed to converge; ``best`` holds the last iterate."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class WindowError(PwltcError, RuntimeError):
    """Orbit left the analysis window without reaching a target section."""


class OracleError(PwltcError, RuntimeError):
    """The independent numerical oracle could not produce a trusted answer."""
