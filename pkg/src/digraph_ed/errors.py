"""Exception types shared across the package.

Every error raised on purpose by this package derives from DigraphEdError,
so callers (notably the CLI) can separate expected failures from bugs.
"""


class DigraphEdError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(DigraphEdError, ValueError):
    """A directed graph violates a structural invariant."""


class SelfLoopError(GraphError):
    """Edge (a, a): self-loops are never allowed."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdgeError(GraphError):
    """The same ordered edge (a, b) appears more than once."""

    def __init__(self, a: int, b: int):
        self.edge = (a, b)
        super().__init__(f"duplicate edge ({a}, {b})")


class AntiparallelPairError(GraphError):
    """Both (a, b) and (b, a) are present; rejected under the default policy."""

    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(
            f"antiparallel pair ({a}, {b}) / ({b}, {a}); "
            "pass allow_antiparallel=True to admit it (statevector path only)"
        )


class IndexOutOfRangeError(DigraphEdError, IndexError):
    """A vertex, qubit, or edge index falls outside its valid range."""


class NotABijectionError(GraphError):
    """The supplied vertex relabeling is not a permutation of 0..M-1."""


class UnsupportedKindError(DigraphEdError, ValueError):
    """Unknown graph-generator kind."""


class BadParamsError(DigraphEdError, ValueError):
    """Generator or gate parameters are missing, extraneous, or out of range."""


class NotNormalizedError(DigraphEdError, ValueError):
    """State amplitudes do not have unit norm within tolerance."""


class CapacityError(DigraphEdError):
    """Requested qubit count exceeds the configured cap."""

    def __init__(self, M: int, cap: int):
        self.M = M
        self.cap = cap
        super().__init__(f"M={M} qubits exceeds the cap of {cap}")


class PolicyViolationError(DigraphEdError, ValueError):
    """The closed-form evaluator was asked about a graph it does not cover."""


class NegativeEigenvalueError(DigraphEdError, ValueError):
    """A density matrix has an eigenvalue below -1e-10."""


class BadGridError(DigraphEdError, ValueError):
    """Sweep grid size is too small."""


class ParseError(DigraphEdError, ValueError):
    """A graph file does not match the JSON schema."""
