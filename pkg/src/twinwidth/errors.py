"""Exception hierarchy shared by every module of the package."""


class TwinWidthError(Exception):
    """Base class for all errors raised by :mod:`twinwidth`."""


class InputError(TwinWidthError, ValueError):
    """Malformed graph, sequence, weight or IBP input."""

    def __init__(self, message, *, source=None, line=None):
        self.source = source
        self.line = line
        where = ""
        if source is not None:
            where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


class InvalidContractionError(TwinWidthError, ValueError):
    """Contraction of equal, dead or unknown vertex ids."""


class StaleIdError(InvalidContractionError):
    """A vertex id that was already consumed by an earlier contraction."""


class SequenceValidationError(TwinWidthError, ValueError):
    """A contraction sequence that cannot be replayed on its graph."""

    def __init__(self, message, step=None):
        self.step = step
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(prefix + message)


class SizeLimitError(TwinWidthError):
    """An instance exceeds a configured size cap (oracle, exact solver, power)."""


class ResourceError(TwinWidthError):
    """A dynamic programming table outgrew its state budget."""


class ContractViolation(TwinWidthError):
    """An input promise was broken (triangle in a triangle-free call, ...).

    ``witness`` holds the offending vertices (original ids) when known.
    """

    def __init__(self, message, witness=None):
        self.witness = list(witness) if witness is not None else None
        super().__init__(message)


class InvariantError(TwinWidthError, AssertionError):
    """An internal invariant check failed (only raised when checks are enabled)."""
