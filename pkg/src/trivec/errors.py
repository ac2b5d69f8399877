"""Exception hierarchy.

Each class maps to one CLI exit code (see ``trivec.cli``).
"""


class TrivecError(Exception):
    exit_code = 1


class ValidationError(TrivecError, ValueError):
    """Bad input: unnormalized state, non-unitary operator, malformed file."""

    exit_code = 2


class VerificationError(TrivecError):
    """A stored expectation or a tolerance check failed."""

    exit_code = 3


class ConsistencyError(TrivecError):
    """Two routes to the same quantity disagree; points at a convention bug."""

    exit_code = 4
