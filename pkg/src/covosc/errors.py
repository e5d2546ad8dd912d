"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`CovoscError`,
which is itself a ``ValueError`` so callers that only care about bad input can
catch the builtin.
"""


class CovoscError(ValueError):
    """Base class for all library errors."""


class InvariantError(CovoscError):
    """A domain-type invariant or operation precondition is violated.

    ``invariant`` names the violated condition in plain text.
    """

    def __init__(self, message, invariant=None):
        super().__init__(message)
        self.invariant = invariant


class QuadratureOrderError(CovoscError):
    """The quadrature rule has too few nodes for the requested accuracy."""

    def __init__(self, message, required=None, given=None):
        super().__init__(message)
        self.required = required
        self.given = given


class AxisTooSmallError(CovoscError):
    """A coordinate axis does not cover the bulk of the wavefunction."""

    def __init__(self, message, required=None, given=None):
        super().__init__(message)
        self.required = required
        self.given = given
