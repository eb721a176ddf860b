"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by longcycle."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class BadParameters(GraphError):
    pass


class NotOnPath(GraphError):
    pass


class OrderViolation(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonAsciiByte(Graph6Error):
    pass


class TooLarge(Graph6Error):
    pass


class BudgetExceeded(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NoFan(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class NotTwoConnected(PreconditionViolated):
    pass


class NotSimple(PreconditionViolated):
    pass


class TheoremViolation(RuntimeError):
    """Neither a longer cycle nor the join structure could be certified.

    Carries the offending graph so callers can serialize it for triage.
    """

    def __init__(self, message: str, graph=None, stage: str = ""):
        super().__init__(message)
        self.graph = graph
        self.stage = stage
