"""Shared exception types.

Input rejection and numerical failure are kept distinct because the CLI
maps them to different exit codes (1 and 2).
"""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class FileFormatError(ValidationError):
    """A matrix or measure-space document is malformed.

    The message names the offending field (and index, where applicable).
    """


class NumericalFailure(RuntimeError):
    """An iterative kernel failed to converge or certify its result."""
