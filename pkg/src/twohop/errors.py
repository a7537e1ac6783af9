"""Exception types shared across the package."""


class TwoHopError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(TwoHopError, ValueError):
    """Matrix/vector shape or size violates an operation's contract."""


class SingularSystemError(TwoHopError):
    """A linear system is numerically singular.

    Carries the offending condition number so callers can log it or
    convert the failure into a block outage.
    """

    def __init__(self, message: str, condition_number: float):
        super().__init__(message)
        self.condition_number = condition_number


class DefinitenessError(TwoHopError, ValueError):
    """Input is not Hermitian positive definite where required."""


class OutageError(TwoHopError):
    """A simulated block hit a numerically degenerate inversion.

    ``stage`` names the pipeline step that failed; ``condition_number``
    is set when the failure was a condition-threshold violation.
    """

    def __init__(self, stage: str, condition_number: float | None = None):
        msg = f"outage at {stage}"
        if condition_number is not None:
            msg += f" (condition number {condition_number:.3e})"
        super().__init__(msg)
        self.stage = stage
        self.condition_number = condition_number


class ModeError(TwoHopError, ValueError):
    """Operation invoked in a mode it does not support (e.g. noiseless MI)."""


class ConfigError(TwoHopError, ValueError):
    """Invalid experiment configuration."""


class InsufficientDataError(TwoHopError, ValueError):
    """Not enough data points for a fit (count or dB span)."""
