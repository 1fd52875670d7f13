#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Immutable simple graphs with degree queries, deletion, and connectivity.

Note
----
Vertices are labelled densely by the integers 0 to n - 1.  Adjacency is stored
in compressed sparse row (CSR) form, so the neighbours of vertex `v` are
`indices[indptr[v]:indptr[v + 1]]`, sorted ascending.

"""

import collections
import functools

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from alphaMIN.errors import EmptyGraphError
from alphaMIN.errors import SelfLoopError
from alphaMIN.errors import VertexOutOfRangeError


ClosedNeighborhoodDeletion = collections.namedtuple(
    'ClosedNeighborhoodDeletion',
    ['graph', 'removed_vertices', 'removed_edges', 'mapping'])


def popcount(mask):
    """Count the set bits of a non-negative integer.

    Parameters
    ----------
    mask : int
        Vertex set encoded with bit `v` standing for vertex `v`

    Returns
    -------
    int
        Number of vertices in the set

    """
    return bin(mask).count('1')


def mask_to_vertices(mask):
    """Convert a vertex bitmask to an ascending list of vertex ids."""
    verts = list()
    while mask:
        low = mask & -mask
        verts.append(low.bit_length() - 1)
        mask ^= low
    return verts


class Graph(object):
    """Undirected simple graph on the vertices 0 to n - 1.

    Parameters
    ----------
    n : int
        Number of vertices
    indptr : array-like
        CSR row pointer of length n + 1
    indices : array-like
        CSR column indices, each row sorted ascending and free of duplicates

    Note
    ----
    Use `build_graph` to construct a graph from an edge list; this constructor
    trusts its input.  The arrays are flagged read-only, and every operation
    that changes the vertex or edge set returns a new `Graph`.

    """

    def __init__(self, n, indptr, indices):
        """Initialize the Graph object."""

        self.n = int(n)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.degrees = np.diff(self.indptr)
        self.degrees.setflags(write=False)
        self.m = int(self.indices.shape[0] // 2)
        return

    def __repr__(self):
        """Print a short description of the graph."""
        return 'Graph(n={:d}, m={:d})'.format(self.n, self.m)

    def __eq__(self, other):
        """Compare vertex counts and edge sets."""
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        """Hash the vertex count and the adjacency arrays."""
        return hash((self.n, self.indptr.tobytes(), self.indices.tobytes()))

    def neighbors(self, v):
        """Return the sorted neighbour array of vertex `v`."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        """Return the degree of vertex `v`."""
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u, v):
        """Test whether `u` and `v` are adjacent."""
        nbrs = self.neighbors(u)
        idx = np.searchsorted(nbrs, v)
        return bool(idx < nbrs.shape[0] and nbrs[idx] == v)

    @functools.cached_property
    def edge_array(self):
        """Edges as an (m, 2) array with u < v, ordered by (u, v)."""

        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.indices
        edges = np.column_stack((src[keep], self.indices[keep]))
        edges.setflags(write=False)
        return edges

    def edges(self):
        """Return the edges as a list of (u, v) tuples, u < v, ascending."""
        return [(int(u), int(v)) for u, v in self.edge_array]

    @functools.cached_property
    def neighbor_lists(self):
        """Neighbours of every vertex as a list of Python lists."""

        flat = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [flat[ptr[v]:ptr[v + 1]] for v in range(self.n)]

    @functools.cached_property
    def adjacency_masks(self):
        """Neighbours of every vertex as integer bitmasks (bit v = vertex v)."""

        masks = list()
        for nbrs in self.neighbor_lists:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return masks


def _from_canonical_edges(n, lo, hi):
    """Build a graph from unique edges with lo < hi.

    Parameters
    ----------
    n : int
        Number of vertices
    lo : np.ndarray
        Smaller endpoint of each edge
    hi : np.ndarray
        Larger endpoint of each edge

    Returns
    -------
    Graph

    """
    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    order = np.lexsort((dst, src))
    counts = np.bincount(src, minlength=n) if n > 0 else np.zeros(0, int)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(counts)
    return Graph(n, indptr, dst[order])


def build_graph(n, edges):
    """Build a simple graph from a vertex count and a list of vertex pairs.

    Parameters
    ----------
    n : int
        Number of vertices
    edges : list-like
        Iterable of (u, v) vertex pairs, 0-based

    Returns
    -------
    Graph
        Graph with duplicate edges collapsed and sorted neighbour lists

    Raises
    ------
    VertexOutOfRangeError
        If an endpoint is negative or not smaller than `n`
    SelfLoopError
        If any pair has u == v

    """
    n = int(n)
    if n < 0:
        raise ValueError('vertex count must be non-negative, got {:d}'.format(
            n))

    pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)

    bad = (pairs < 0) | (pairs >= n)
    if bad.any():
        row, col = np.argwhere(bad)[0]
        raise VertexOutOfRangeError(int(pairs[row, col]), n)

    loops = pairs[:, 0] == pairs[:, 1]
    if loops.any():
        raise SelfLoopError(int(pairs[np.argmax(loops), 0]))

    lo = pairs.min(axis=1)
    hi = pairs.max(axis=1)
    keys = np.unique(lo * max(n, 1) + hi)

    return _from_canonical_edges(n, keys // max(n, 1), keys % max(n, 1))


def degree(g, v):
    """Return the degree of vertex `v` in `g`.

    Parameters
    ----------
    g : Graph
        Input graph
    v : int
        Vertex id

    Returns
    -------
    int
        Number of neighbours of `v`

    """
    if v < 0 or v >= g.n:
        raise VertexOutOfRangeError(v, g.n)
    return g.degree(v)


def min_degree_vertices(g):
    """List every vertex attaining the minimum degree of `g`.

    Parameters
    ----------
    g : Graph
        Input graph

    Returns
    -------
    list of int
        Vertices of degree delta(g), ascending

    Raises
    ------
    EmptyGraphError
        If `g` has no vertices

    """
    if g.n == 0:
        raise EmptyGraphError('the minimum degree of an empty graph is '
                              'undefined')
    return np.flatnonzero(g.degrees == g.degrees.min()).tolist()


def is_independent_set(g, vertices):
    """Test that no two of `vertices` are adjacent in `g`.

    Parameters
    ----------
    g : Graph
        Input graph
    vertices : iterable of int
        Candidate vertex set

    Returns
    -------
    bool

    """
    members = np.zeros(g.n, dtype=bool)
    members[list(vertices)] = True
    edges = g.edge_array
    return not np.any(members[edges[:, 0]] & members[edges[:, 1]])


def delete_vertices(g, vertices):
    """Remove a vertex set and relabel the survivors densely.

    Parameters
    ----------
    g : Graph
        Input graph
    vertices : iterable of int
        Vertices to delete

    Returns
    -------
    sub : Graph
        Induced subgraph on the surviving vertices
    mapping : dict
        Map from old vertex id to new vertex id for every survivor

    """
    drop = np.zeros(g.n, dtype=bool)
    for v in vertices:
        if v < 0 or v >= g.n:
            raise VertexOutOfRangeError(v, g.n)
        drop[v] = True

    survivors = np.flatnonzero(~drop)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[survivors] = np.arange(survivors.shape[0])

    edges = g.edge_array
    keep = ~(drop[edges[:, 0]] | drop[edges[:, 1]])
    sub = _from_canonical_edges(survivors.shape[0], new_id[edges[keep, 0]],
                                new_id[edges[keep, 1]])
    mapping = {int(old): i for i, old in enumerate(survivors)}

    return sub, mapping


def delete_closed_neighborhood(g, v):
    """Delete a vertex together with all of its neighbours.

    Parameters
    ----------
    g : Graph
        Input graph
    v : int
        Vertex whose closed neighbourhood is removed

    Returns
    -------
    ClosedNeighborhoodDeletion
        Named tuple of the remaining `graph`, the `removed_vertices` (old
        ids), the number of `removed_edges` (edges with at least one endpoint
        deleted), and the old to new `mapping` of the survivors

    Raises
    ------
    VertexOutOfRangeError
        If `v` is not a vertex of `g`

    """
    if v < 0 or v >= g.n:
        raise VertexOutOfRangeError(v, g.n)

    removed = frozenset([v] + g.neighbors(v).tolist())
    sub, mapping = delete_vertices(g, removed)

    return ClosedNeighborhoodDeletion(sub, removed, g.m - sub.m, mapping)


def is_connected(g):
    """Test whether `g` is connected.

    Parameters
    ----------
    g : Graph
        Input graph

    Returns
    -------
    bool
        True if `g` has at most one vertex or a single connected component

    Note
    ----
    The empty graph (n=0) is treated as connected.

    """
    if g.n <= 1:
        return True

    adj = csr_matrix((np.ones(g.indices.shape[0], dtype=np.int8), g.indices,
                      g.indptr), shape=(g.n, g.n))
    ncomp = connected_components(adj, directed=False, return_labels=False)
    return ncomp == 1
