class BSWavesError(Exception):
    """Base class of every error raised by the package."""


class DomainError(BSWavesError, ValueError):
    """A point lies outside the domain of its model space."""


class ArgumentError(BSWavesError, ValueError):
    """An argument is outside its admissible range."""


class PreconditionError(BSWavesError, ValueError):
    """An operation was called with inputs violating its precondition."""


class NumericError(BSWavesError, RuntimeError):
    """A quadrature or refinement loop did not reach its tolerance.

    Args:
        msg (str): Human readable message.
        **diagnostics: Whatever the failing routine knows about the
            failure, e.g. ``estimate``, ``error``, ``nodes``, ``tol``.
    """

    def __init__(self, msg, **diagnostics):
        self.diagnostics = diagnostics
        if diagnostics:
            detail = ', '.join(f'{k}={v!r}' for k, v in diagnostics.items())
            msg = f'{msg} ({detail})'
        super().__init__(msg)
