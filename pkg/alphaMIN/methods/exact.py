#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Exact maximum independent sets.

Two independent solvers are provided: a bit-parallel enumeration of every
vertex subset for small graphs, and a branch-and-bound search for larger ones.
Conclusions about bound validity rest on both agreeing.

Note
----
Witnesses are the lexicographically smallest maximum independent set, where
sets are compared as ascending vertex lists.

"""

import dataclasses

import numpy as np

from alphaMIN.errors import BudgetExceededError
from alphaMIN.graphs.core import mask_to_vertices
from alphaMIN.graphs.core import popcount

ENUMERATION_LIMIT = 24
ALL_SETS_LIMIT = 20


@dataclasses.dataclass(frozen=True)
class AlphaResult(object):
    """Independence number with a certificate.

    Parameters
    ----------
    alpha : int
        Independence number
    witness : tuple of int
        Maximum independent set, ascending
    method : str
        'enumeration' or 'branch_and_bound'

    """

    alpha: int
    witness: tuple
    method: str


def _subset_tables(g):
    """Tabulate independence and size of every vertex subset.

    Parameters
    ----------
    g : Graph
        Input graph with at most `ENUMERATION_LIMIT` vertices

    Returns
    -------
    indep : np.ndarray
        Boolean flag per subset code
    size : np.ndarray
        Subset cardinality per code

    Note
    ----
    Vertex v is stored at bit n - 1 - v, so among equal-size sets a larger
    code is a lexicographically smaller vertex list.

    """
    n_verts = g.n
    rev = [0] * n_verts
    for v, nbrs in enumerate(g.neighbor_lists):
        for u in nbrs:
            rev[v] |= 1 << (n_verts - 1 - u)

    indep = np.zeros(1 << n_verts, dtype=bool)
    size = np.zeros(1 << n_verts, dtype=np.uint8)
    indep[0] = True

    for bit in range(n_verts):
        low = 1 << bit
        codes = np.arange(low, dtype=np.uint32)
        nbrs = rev[n_verts - 1 - bit] & (low - 1)
        indep[low:2 * low] = indep[:low] & ((codes & nbrs) == 0)
        size[low:2 * low] = size[:low] + 1

    return indep, size


def _code_to_vertices(code, n_verts):
    """Convert a reversed-bit subset code to an ascending vertex tuple."""
    return tuple(v for v in range(n_verts) if code >> (n_verts - 1 - v) & 1)


def alpha_enumeration(g):
    """Compute the independence number by checking every vertex subset.

    Parameters
    ----------
    g : Graph
        Input graph with at most 24 vertices

    Returns
    -------
    AlphaResult
        Result with the lexicographically smallest maximum witness

    Raises
    ------
    BudgetExceededError
        If `g` has more than `ENUMERATION_LIMIT` vertices

    """
    if g.n > ENUMERATION_LIMIT:
        raise BudgetExceededError(g.n, ENUMERATION_LIMIT)

    indep, size = _subset_tables(g)
    alpha = int(size[indep].max())
    best = int(np.flatnonzero(indep & (size == alpha))[-1])

    return AlphaResult(alpha, _code_to_vertices(best, g.n), 'enumeration')


def all_maximum_independent_sets(g):
    """List every maximum independent set.

    Parameters
    ----------
    g : Graph
        Input graph with at most 20 vertices

    Returns
    -------
    list of tuple
        Every independent set of size alpha, in lexicographic order

    Raises
    ------
    BudgetExceededError
        If `g` has more than `ALL_SETS_LIMIT` vertices

    """
    if g.n > ALL_SETS_LIMIT:
        raise BudgetExceededError(g.n, ALL_SETS_LIMIT)

    indep, size = _subset_tables(g)
    alpha = size[indep].max()
    codes = np.flatnonzero(indep & (size == alpha))[::-1]

    return [_code_to_vertices(int(code), g.n) for code in codes]


def _max_independent_size(adj, rem):
    """Size of a maximum independent set inside a vertex bitmask.

    Parameters
    ----------
    adj : list of int
        Adjacency bitmask of every vertex
    rem : int
        Bitmask of the vertices to search

    Returns
    -------
    int

    Note
    ----
    Isolated and degree-1 vertices are taken greedily, then the search
    branches on a maximum-degree vertex (include, then exclude) and prunes a
    branch once it cannot beat the best size found: chosen + remaining <=
    best.

    """
    best = [0]

    def search(rem, chosen):
        reduced = True
        while reduced and rem:
            reduced = False
            for v in mask_to_vertices(rem):
                if not rem >> v & 1:
                    continue
                d_v = popcount(adj[v] & rem)
                if d_v <= 1:
                    chosen += 1
                    rem &= ~(adj[v] | (1 << v))
                    reduced = True

        if chosen + popcount(rem) <= best[0]:
            return
        if rem == 0:
            best[0] = chosen
            return

        pivot = max(mask_to_vertices(rem),
                    key=lambda v: (popcount(adj[v] & rem), -v))
        search(rem & ~(adj[pivot] | (1 << pivot)), chosen + 1)
        search(rem & ~(1 << pivot), chosen)
        return

    search(rem, 0)
    return best[0]


def alpha_branch_and_bound(g):
    """Compute the independence number by branch and bound.

    Parameters
    ----------
    g : Graph
        Input graph; practical to about 60 vertices on sparse random graphs

    Returns
    -------
    AlphaResult
        Result with the lexicographically smallest maximum witness

    Note
    ----
    After the size is known, the witness is built vertex by vertex in
    ascending order, keeping a vertex whenever the vertices after it that are
    not adjacent to it still hold an independent set large enough to reach
    alpha.

    """
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    alpha = _max_independent_size(adj, full)

    witness = list()
    cand = full
    need = alpha
    for v in range(g.n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue

        later = cand & ~(adj[v] | ((1 << (v + 1)) - 1))
        if need == 1 or _max_independent_size(adj, later) >= need - 1:
            witness.append(v)
            need -= 1
            cand = later
        else:
            cand &= ~(1 << v)

    return AlphaResult(alpha, tuple(witness), 'branch_and_bound')


def solve_alpha(g, enumeration_cutoff=16):
    """Compute alpha with the solver suited to the graph size.

    Parameters
    ----------
    g : Graph
        Input graph
    enumeration_cutoff : int
        Graphs with at most this many vertices use `alpha_enumeration`,
        larger ones `alpha_branch_and_bound` (default=16)

    Returns
    -------
    AlphaResult

    """
    if g.n <= min(enumeration_cutoff, ENUMERATION_LIMIT):
        return alpha_enumeration(g)
    return alpha_branch_and_bound(g)
