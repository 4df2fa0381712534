"""Exception hierarchy.

Everything the solver pipeline can raise on bad or unsupported input derives
from :class:`SolverError`; the CLI maps that to exit status 2.
"""


class DeltaLaplaceError(Exception):
    """Base class for all package errors."""


class SolverError(DeltaLaplaceError):
    pass


class UnsupportedDifference(SolverError):
    pass


class UnsupportedSequence(SolverError):
    pass


class NotIntegrableInAlgebra(SolverError):
    pass


class UnsupportedPole(SolverError):
    pass


class ImproperRational(SolverError):
    pass


class NonCausalImage(SolverError):
    pass


class MissingInitialCondition(SolverError):
    pass


class InconsistentIC(SolverError):
    pass


class ConstantUnsolvable(SolverError):
    pass


class AnchorUnreachable(SolverError):
    pass


class VerificationError(DeltaLaplaceError):
    """A closed form failed the oracle; carries the failing result."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class InputError(DeltaLaplaceError):
    """Malformed or semantically invalid user input (CLI exit status 1)."""


class SemanticError(InputError, ValueError):
    pass


class ParseError(InputError, ValueError):
    def __init__(self, message, offset=0, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(repr(x) for x in self.expected)})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")
