#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Closed-form lower bounds on the independence number of a connected graph.

Every bound has the form ``(s - sqrt(s**2 - c * n**2)) / d`` for a connected
graph on n vertices and m edges:

============ ============ ==== ===
kind         s            c    d
============ ============ ==== ===
harant       2m + n + 1   4    2
claimed      2m + n + 2   16   8
repaired     2m + n + 2   8    4
============ ============ ==== ===

'harant' is the published order-and-size bound, 'claimed' is the improvement
whose derivation is checked by `alphaMIN.methods.chain`, and 'repaired' is
derived in this package by keeping the correct sign of the sum of k_j terms in
that derivation.  It is not a published formula.

Note
----
Validity decisions never use floating point: `bound_holds_exact` compares a
bound with an integer in exact integer arithmetic.

"""

import dataclasses
from fractions import Fraction

import numpy as np

from alphaMIN.errors import BadParamsError
from alphaMIN.errors import NonpositiveDenominatorError
from alphaMIN.errors import NotConnectedInputError

# Linear offset, discriminant coefficient, and divisor of each bound
forms = {'harant': (1, 4, 2), 'claimed': (2, 16, 8), 'repaired': (2, 8, 4)}

# Where each bound comes from, printed next to it
origins = {'harant': 'published', 'claimed': 'published',
           'repaired': 'derived'}

REAL = 'real'
NOT_REAL = 'not_real'
HOLDS = 'holds'
VIOLATED = 'violated'


@dataclasses.dataclass(frozen=True)
class BoundValue(object):
    """Evaluated closed-form bound.

    Parameters
    ----------
    kind : str
        'harant', 'claimed', or 'repaired'
    s : int
        Linear term
    discriminant : int
        s**2 - c * n**2
    status : str
        'real' when the discriminant is non-negative, else 'not_real'
    value : float or NoneType
        Bound value when real (default=None)
    ceil_value : int or NoneType
        Smallest integer not below the bound, computed exactly, when real
        (default=None)

    """

    kind: str
    s: int
    discriminant: int
    status: str
    value: float = None
    ceil_value: int = None

    @property
    def is_real(self):
        """True when the bound has a real value."""
        return self.status == REAL


def _check_counts(n, m):
    """Enforce the connected-input preconditions n >= 1, m >= n - 1."""
    if n < 1 or m < n - 1:
        raise NotConnectedInputError(' '.join((
            'bounds need a connected graph with n >= 1 and m >= n - 1,',
            'got n={:} and m={:}'.format(n, m))))
    return


def _terms(kind, n, m):
    """Return (s, discriminant, divisor) for a bound kind."""
    if kind not in forms:
        raise BadParamsError('unknown bound kind: {:}'.format(kind))
    offset, coeff, div = forms[kind]
    lin = 2 * m + n + offset
    return lin, lin * lin - coeff * n * n, div


def _at_most(lin, disc, div, value):
    """Test (lin - sqrt(disc)) / div <= value exactly for integer `value`."""
    gap = lin - div * value
    return gap <= 0 or gap * gap <= disc


def evaluate_bound(kind, n, m):
    """Evaluate one closed-form bound.

    Parameters
    ----------
    kind : str
        'harant', 'claimed', or 'repaired'
    n : int
        Number of vertices, at least 1
    m : int
        Number of edges, at least n - 1

    Returns
    -------
    BoundValue

    Raises
    ------
    NotConnectedInputError
        If the counts cannot come from a connected graph

    """
    _check_counts(n, m)
    lin, disc, div = _terms(kind, n, m)

    if disc < 0:
        return BoundValue(kind, lin, disc, NOT_REAL)

    value = float((lin - np.sqrt(float(disc))) / div)

    # Walk to the exact ceiling from just below the float estimate
    ceil_value = max(int(np.floor(value)) - 1, 0)
    while not _at_most(lin, disc, div, ceil_value):
        ceil_value += 1

    return BoundValue(kind, lin, disc, REAL, value, ceil_value)


def harant_bound(n, m):
    """Evaluate ((2m+n+1) - ((2m+n+1)**2 - 4n**2)**(1/2)) / 2.

    Parameters
    ----------
    n : int
        Number of vertices
    m : int
        Number of edges

    Returns
    -------
    BoundValue
        Always real for connected inputs

    """
    return evaluate_bound('harant', n, m)


def claimed_bound(n, m):
    """Evaluate ((2m+n+2) - ((2m+n+2)**2 - 16n**2)**(1/2)) / 8.

    Parameters
    ----------
    n : int
        Number of vertices
    m : int
        Number of edges

    Returns
    -------
    BoundValue
        Not real whenever 2m + n + 2 < 4n, which includes every tree

    """
    return evaluate_bound('claimed', n, m)


def repaired_bound(n, m):
    """Evaluate ((2m+n+2) - ((2m+n+2)**2 - 8n**2)**(1/2)) / 4.

    Parameters
    ----------
    n : int
        Number of vertices
    m : int
        Number of edges

    Returns
    -------
    BoundValue
        Always real for connected inputs

    """
    return evaluate_bound('repaired', n, m)


def bound_holds_exact(kind, n, m, alpha):
    """Decide whether a bound is at most `alpha` without floating point.

    Parameters
    ----------
    kind : str
        'harant', 'claimed', or 'repaired'
    n : int
        Number of vertices
    m : int
        Number of edges
    alpha : int
        Value to compare with, usually the independence number

    Returns
    -------
    str
        'holds', 'violated', or 'not_real' when the discriminant is negative

    Note
    ----
    bound <= alpha exactly when s - d * alpha <= 0 or
    (s - d * alpha)**2 <= s**2 - c * n**2.

    """
    _check_counts(n, m)
    lin, disc, div = _terms(kind, n, m)

    if disc < 0:
        return NOT_REAL
    return HOLDS if _at_most(lin, disc, div, int(alpha)) else VIOLATED


def degree_excess(trace, g):
    """Sum d_G(i) - delta(G_j(i)) over every vertex.

    Parameters
    ----------
    trace : MinTrace
        Run of MIN on `g`
    g : Graph
        Graph the trace was produced from

    Returns
    -------
    int
        2m minus the sum over iterations of (1 + d_j) * d_j, where vertex i
        was deleted at iteration j(i) and d_j is the degree of the chosen
        vertex, the minimum degree of G_j

    """
    removed = sum((1 + it.chosen_degree) * it.chosen_degree
                  for it in trace.iterations)
    return 2 * g.m - removed


def inequality1_rhs(trace, g):
    """Evaluate n**2 / (2m + n - degree_excess) exactly.

    Parameters
    ----------
    trace : MinTrace
        Run of MIN on `g`
    g : Graph
        Graph the trace was produced from

    Returns
    -------
    Fraction
        Lower bound on the iteration count claimed for the run

    Raises
    ------
    NonpositiveDenominatorError
        If 2m + n - degree_excess <= 0

    """
    denom = 2 * g.m + g.n - degree_excess(trace, g)
    if denom <= 0:
        raise NonpositiveDenominatorError(
            'inequality (1) denominator is {:d} for n={:d}, m={:d}'.format(
                denom, g.n, g.m))
    return Fraction(g.n * g.n, denom)


def quadratic_step_rhs(k, n, m):
    """Evaluate n**2 / (2m + n + 2 - 4k), the step before the claimed bound.

    Parameters
    ----------
    k : int
        Iteration count of a run
    n : int
        Number of vertices
    m : int
        Number of edges

    Returns
    -------
    Fraction or NoneType
        Exact value, or None when the denominator is not positive

    """
    denom = 2 * m + n + 2 - 4 * k
    if denom <= 0:
        return None
    return Fraction(n * n, denom)
