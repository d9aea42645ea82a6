"""Exception types shared across the package.

Two failure kinds are kept apart on purpose.  A ``Refusal`` means the input
was outside what an operation accepts (a non-planar graph, a cyclic "tree",
an instance too large for exhaustive search).  An ``InternalConsistencyError``
means a claimed bound did not hold at runtime, which points at a bug or at a
wrong catalog reconstruction rather than at bad input.
"""


class DPColorError(Exception):
    """Base class for all package errors."""


class Refusal(DPColorError, ValueError):
    """Input violates the precondition of the requested operation."""


class InternalConsistencyError(DPColorError, AssertionError):
    """A bound that the algorithm relies on failed to hold.

    ``trace`` carries whatever partial record the caller had at the time
    (usually a ``ColoringTrace``), so a failure can be replayed.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class OutsideCatalog(InternalConsistencyError):
    """An MP2 graph of minimum degree 4 matched no catalog entry.

    The catalog is supposed to be complete for that class, so this is
    reported as a consistency failure, but under its own name: it points at
    a missing catalog family rather than at a failed bound.
    """
