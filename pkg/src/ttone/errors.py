"""Exception hierarchy shared by every module."""


class TToneError(Exception):
    """Base class for all errors raised by the package."""


class InvalidEdge(TToneError, ValueError):
    pass


class InvalidVertex(TToneError, ValueError):
    pass


class InvalidLabel(TToneError, ValueError):
    pass


class AlreadyColored(TToneError, ValueError):
    pass


class NotValid(TToneError, ValueError):
    """A label was offered that some colored vertex forbids."""


class GraphClassError(TToneError, ValueError):
    """The input graph is outside the class an algorithm requires."""


class NotBipartite(GraphClassError):
    pass


class NotChordal(GraphClassError):
    pass


class NotATree(GraphClassError):
    pass


class DegreeTooHigh(GraphClassError):
    pass


class BadAnchor(TToneError, ValueError):
    pass


class Infeasible(TToneError, ValueError):
    """Generator parameters admit no graph of the requested kind."""


class TooLarge(TToneError, ValueError):
    pass


class ParseError(TToneError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalInvariant(TToneError, AssertionError):
    """A step that is proven to always succeed did not.

    Seeing this means a bug, never bad input.
    """
