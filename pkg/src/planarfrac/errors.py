"""Exception types shared across the solver."""


class PlanarFracError(Exception):
    """Base class for all package errors."""


class ConfigError(PlanarFracError):
    """Invalid configuration or parameter bundle.

    Carries the full list of violations so a user can fix them in one pass.
    """

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class SolverError(PlanarFracError):
    """An iterative solve failed to converge."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class StepFailure(PlanarFracError):
    """A time step attempt failed; the caller may retry with another dt."""


class SimulationAbort(PlanarFracError):
    """The run cannot proceed (retries and rollbacks exhausted)."""
