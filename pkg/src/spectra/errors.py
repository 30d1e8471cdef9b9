"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input or an order the codec cannot encode."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph (diameter would be infinite)."""


class IsolatedVertexError(ValueError):
    """Normalized Laplacian is undefined when some degree is zero."""


class SimplicityError(ValueError):
    """The extreme eigenvalue the check relies on is not simple."""


class RankOneError(ArithmeticError):
    """Matrix is not rank one within the requested tolerance."""


class ConvergenceError(ArithmeticError):
    """Iteration failed to converge within its cap; input is outside the
    contract (e.g. not the matrix of a connected graph)."""


class PipelineMismatchError(RuntimeError):
    """Exact and floating-point pipelines disagree on the number of distinct
    eigenvalues.  This is always a bug, never a property of the input."""
