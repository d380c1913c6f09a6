"""Exception hierarchy shared by every module."""


class HypergraphError(ValueError):
    """Base class for invalid input to any hypergraph operation."""


class NotUniform(HypergraphError):
    def __init__(self, edge, k):
        self.edge = tuple(edge)
        self.k = k
        super().__init__(f"edge {list(self.edge)} has {len(self.edge)} vertices, expected {k}")


class NotLinear(HypergraphError):
    def __init__(self, first, second):
        self.first = tuple(first)
        self.second = tuple(second)
        shared = sorted(set(first) & set(second))
        super().__init__(
            f"edges {list(self.first)} and {list(self.second)} share {len(shared)} vertices {shared}"
        )


class UnknownVertex(HypergraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not in the vertex set")


class LabelClash(HypergraphError):
    pass


class MissingAnchor(HypergraphError):
    pass


class BadLength(HypergraphError):
    pass


class BadResidue(HypergraphError):
    pass


class TooSmall(HypergraphError):
    pass


class OutOfDomain(HypergraphError):
    pass


class ParseError(HypergraphError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class BudgetExceeded(RuntimeError):
    """Raised when a search runs out of time or nodes.

    ``partial`` holds the best result found so far, flagged ``exhausted=False``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
