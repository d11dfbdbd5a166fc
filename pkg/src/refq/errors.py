"""Exception hierarchy shared by all refq modules.

The CLI maps these onto exit codes: bad input 2, size/bound limits 3,
failed internal consistency checks 4.
"""


class RefqError(Exception):
    """Base class for all refq errors."""

    exit_code = 1


class InputError(RefqError):
    """Malformed or inconsistent input (bad JSON, conductor mismatch, singular generator, ...)."""

    exit_code = 2


class LimitError(RefqError):
    """A configured bound was exceeded (group too large, degree bound too small, ...)."""

    exit_code = 3


class InternalCheckError(RefqError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""

    exit_code = 4
