"""Exceptions raised by the solver stack."""

__all__ = [
    "FdCrackError",
    "InvalidCrackError",
    "ElementError",
    "SolverError",
    "MetricError",
    "SurfaceError",
    "ConfigurationError",
]


class FdCrackError(Exception):
    """Base class of all errors raised by compas_fdcrack."""


class InvalidCrackError(FdCrackError):
    """The crack description does not split the domain, or leaves nothing to glue."""


class ElementError(FdCrackError):
    """Unsupported element degree or invalid displacement/multiplier couple."""


class SolverError(FdCrackError):
    """A factorization or an iteration broke down.

    Parameters
    ----------
    message : str
    block : str, optional
        Name of the block that failed, e.g. ``'A+'``, ``'A-'`` or ``'multiplier'``.
    """

    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class MetricError(FdCrackError):
    """An error metric cannot be evaluated (zero reference norm, negative energy)."""


class SurfaceError(FdCrackError):
    """Invalid triangle surface for the 3D crack extension.

    Parameters
    ----------
    message : str
    line : int, optional
        1-based line number in the surface file, if the error comes from parsing.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)
        self.line = line


class ConfigurationError(FdCrackError):
    """Invalid command-line configuration."""
