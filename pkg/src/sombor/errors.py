"""Exception hierarchy shared by every module of the package."""


class SomborError(Exception):
    """Base class for all errors raised by :mod:`sombor`."""


class GraphError(SomborError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NoSuchEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class SiteInvalid(GraphError):
    pass


class BadParams(SomborError, ValueError):
    pass


class SizeUnsupported(BadParams):
    pass


class SizeTooLarge(BadParams):
    pass


class Graph6Error(SomborError, ValueError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonCanonicalPadding(Graph6Error):
    pass


class TooLarge(Graph6Error):
    pass


class EdgeListError(SomborError, ValueError):
    pass


class NoConvergence(SomborError, ArithmeticError):
    pass


class QuadratureFailure(SomborError, ArithmeticError):
    pass


class RangeError(SomborError, OverflowError):
    pass


class UnknownBound(SomborError, KeyError):
    pass


class UnknownFamily(SomborError, KeyError):
    pass


class NotApplicable(SomborError, ValueError):
    pass


class EmptyCorpus(SomborError, ValueError):
    pass
