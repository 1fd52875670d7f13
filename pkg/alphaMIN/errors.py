#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Exceptions raised by alphaMIN routines.

Note
----
Every class subclasses `ValueError`, so callers that only care about bad input
may continue to catch `ValueError`.

"""


class SelfLoopError(ValueError):
    """Raised when an edge joins a vertex to itself.

    Parameters
    ----------
    vertex : int
        Vertex at both ends of the edge
    lineno : int or NoneType
        Line of the input document holding the edge, if parsing
        (default=None)

    """

    def __init__(self, vertex, lineno=None):
        self.vertex = vertex
        self.lineno = lineno
        msg = 'self-loop at vertex {:d}'.format(vertex)
        if lineno is not None:
            msg = 'line {:d}: {:s}'.format(lineno, msg)
        super().__init__(msg)


class VertexOutOfRangeError(ValueError):
    """Raised when a vertex id falls outside [0, n).

    Parameters
    ----------
    vertex : int
        Offending vertex id
    n : int
        Number of vertices in the graph
    lineno : int or NoneType
        Line of the input document holding the vertex, if parsing
        (default=None)

    """

    def __init__(self, vertex, n, lineno=None):
        self.vertex = vertex
        self.n = n
        self.lineno = lineno
        msg = 'vertex {:} out of range for n={:d}'.format(vertex, n)
        if lineno is not None:
            msg = 'line {:d}: {:s}'.format(lineno, msg)
        super().__init__(msg)


class EmptyGraphError(ValueError):
    """Raised when an operation needs at least one vertex."""


class MissingHeaderError(ValueError):
    """Raised when a DIMACS document has no `p edge` line before its edges."""


class MalformedLineError(ValueError):
    """Raised when a line of a graph document cannot be parsed."""

    def __init__(self, lineno, line=''):
        self.lineno = lineno
        self.line = line
        super().__init__('malformed line {:d}: {!r}'.format(lineno, line))


class BadParamsError(ValueError):
    """Raised when generator or campaign parameters are invalid."""


class NotConnectedAfterRetriesError(ValueError):
    """Raised when G(n, p) sampling never produced a connected graph."""


class BudgetExceededError(ValueError):
    """Raised when an exact routine is asked to go past its size budget.

    Parameters
    ----------
    n : int
        Number of vertices requested
    budget : int
        Largest number of vertices the routine accepts

    """

    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        super().__init__('n={:d} exceeds the vertex budget of {:d}'.format(
            n, budget))


class NotConnectedInputError(ValueError):
    """Raised when a bound needs a connected graph and did not get one."""


class NonpositiveDenominatorError(ValueError):
    """Raised when the inequality (1) denominator is zero or negative."""


class NotMaximumSetError(ValueError):
    """Raised when a supplied vertex set is not a maximum independent set."""
