#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Seed-reproducible graph families and exhaustive small-graph enumeration.

Note
----
All randomness comes from `SplitMix64`, a 64-bit mixing generator written out
as integer arithmetic so that campaigns reproduce on every platform.  With
``M = 2**64`` and ``G = 0x9E3779B97F4A7C15`` each draw does::

    state = (state + G) mod M
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod M
    output = z ^ (z >> 31)

Bounded integers use rejection so every value below the bound is equally
likely, and floats take the top 53 bits of a draw.

"""

import itertools

from alphaMIN.errors import BadParamsError
from alphaMIN.errors import NotConnectedAfterRetriesError
from alphaMIN.graphs.core import build_graph
from alphaMIN.graphs.core import is_connected

MASK64 = (1 << 64) - 1
GOLDEN64 = 0x9E3779B97F4A7C15

# Number of parameters taken by each named family
named_families = {'path': 1, 'cycle': 1, 'complete': 1,
                  'complete_bipartite': 2, 'star': 1, 'petersen': 0}

# Known numbers of connected labelled graphs on n vertices
connected_counts = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}

MAX_ENUMERATION_ORDER = 7


def _mix64(z):
    """Apply the SplitMix64 output mixing to a 64-bit state."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64(object):
    """Portable 64-bit pseudo-random stream.

    Parameters
    ----------
    seed : int
        Unsigned 64-bit seed; larger values are reduced modulo 2**64

    """

    def __init__(self, seed):
        """Initialize the stream state."""
        self.state = int(seed) & MASK64
        return

    def next_u64(self):
        """Return the next unsigned 64-bit output."""
        self.state = (self.state + GOLDEN64) & MASK64
        return _mix64(self.state)

    def randbelow(self, bound):
        """Return a uniform integer in [0, `bound`).

        Parameters
        ----------
        bound : int
            Exclusive upper limit, at least 1

        Returns
        -------
        int

        """
        if bound < 1:
            raise BadParamsError('bound must be positive, got {:}'.format(
                bound))

        limit = (1 << 64) - ((1 << 64) % bound)
        draw = self.next_u64()
        while draw >= limit:
            draw = self.next_u64()
        return draw % bound

    def random(self):
        """Return a uniform float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def pair(self, n):
        """Return a uniform ordered pair of distinct vertices of [0, n)."""
        u = self.randbelow(n)
        v = self.randbelow(n - 1)
        if v >= u:
            v += 1
        return u, v


def derive_seed(seed, index):
    """Derive the seed of an instance or restart from a parent seed.

    Parameters
    ----------
    seed : int
        Parent seed
    index : int
        Instance or restart index, starting at 0

    Returns
    -------
    int
        Output number `index` + 1 of the `SplitMix64` stream seeded with
        `seed`, which is independent of any scheduling order

    """
    return _mix64((int(seed) + (int(index) + 1) * GOLDEN64) & MASK64)


def _petersen_edges():
    """List the edges of the Petersen graph (outer 0-4, inner 5-9)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def gen_named(family, *params):
    """Build a standard graph.

    Parameters
    ----------
    family : str
        One of 'path' (n), 'cycle' (n), 'complete' (n), 'complete_bipartite'
        (a, b), 'star' (number of leaves), or 'petersen' (no parameters)
    *params : int
        Family parameters, as listed above

    Returns
    -------
    Graph
        Paths and cycles use consecutive vertices, complete bipartite graphs
        have sides [0, a) and [a, a + b), and stars have centre 0

    Raises
    ------
    BadParamsError
        For an unknown family, the wrong number of parameters, or parameters
        that do not describe a graph of the family

    """
    if family not in named_families:
        raise BadParamsError('unknown graph family: {:}'.format(family))
    if len(params) != named_families[family]:
        raise BadParamsError('{:s} takes {:d} parameter(s), got {:d}'.format(
            family, named_families[family], len(params)))

    params = [int(par) for par in params]
    minimums = {'path': [1], 'cycle': [3], 'complete': [1],
                'complete_bipartite': [1, 1], 'star': [0], 'petersen': []}
    for par, low in zip(params, minimums[family]):
        if par < low:
            raise BadParamsError('{:s} needs parameters >= {:}, got {:}'.format(
                family, minimums[family], params))

    if family == 'path':
        n_verts = params[0]
        edges = [(i, i + 1) for i in range(n_verts - 1)]
    elif family == 'cycle':
        n_verts = params[0]
        edges = [(i, (i + 1) % n_verts) for i in range(n_verts)]
    elif family == 'complete':
        n_verts = params[0]
        edges = list(itertools.combinations(range(n_verts), 2))
    elif family == 'complete_bipartite':
        n_verts = params[0] + params[1]
        edges = [(u, v) for u in range(params[0])
                 for v in range(params[0], n_verts)]
    elif family == 'star':
        n_verts = params[0] + 1
        edges = [(0, v) for v in range(1, n_verts)]
    else:
        n_verts = 10
        edges = _petersen_edges()

    return build_graph(n_verts, edges)


def gen_gnm_connected(n, m, seed):
    """Draw a connected graph with exactly `n` vertices and `m` edges.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1
    m : int
        Number of edges, from n - 1 to n(n - 1)/2
    seed : int
        Stream seed

    Returns
    -------
    Graph

    Raises
    ------
    BadParamsError
        If `n` < 1 or `m` is outside [n - 1, n(n - 1)/2]

    Note
    ----
    A uniform spanning tree of the complete graph is drawn first with the
    random-walk (Aldous-Broder) construction, then m - (n - 1) distinct
    non-tree edges are added.  When more than half of the non-tree pairs are
    needed, the pairs are listed and a prefix of a seeded shuffle is taken, so
    dense requests never stall on rejection.

    """
    n = int(n)
    m = int(m)
    total = n * (n - 1) // 2
    if n < 1 or m < n - 1 or m > total:
        raise BadParamsError(' '.join(('need n >= 1 and n - 1 <= m <=',
                                       'n(n - 1)/2, got n={:d}'.format(n),
                                       'm={:d}'.format(m))))

    rng = SplitMix64(seed)

    # Random walk until every vertex has been entered once
    visited = bytearray(n)
    current = rng.randbelow(n)
    visited[current] = 1
    remaining = n - 1
    edges = list()
    while remaining > 0:
        nxt = rng.randbelow(n - 1)
        if nxt >= current:
            nxt += 1
        if not visited[nxt]:
            visited[nxt] = 1
            edges.append((min(current, nxt), max(current, nxt)))
            remaining -= 1
        current = nxt

    extra = m - (n - 1)
    if extra > (total - (n - 1)) // 2:
        taken = set(edges)
        pool = [pair for pair in itertools.combinations(range(n), 2)
                if pair not in taken]
        for i in range(extra):
            j = i + rng.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        edges.extend(pool[:extra])
    else:
        taken = set(edges)
        while extra > 0:
            u, v = rng.pair(n)
            pair = (min(u, v), max(u, v))
            if pair not in taken:
                taken.add(pair)
                edges.append(pair)
                extra -= 1

    return build_graph(n, edges)


def gen_gnp_connected(n, p, seed, max_retries=100):
    """Sample G(n, p), resampling until the graph is connected.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1
    p : float
        Edge probability in [0, 1]
    seed : int
        Stream seed
    max_retries : int
        Number of samples drawn before giving up (default=100)

    Returns
    -------
    Graph

    Raises
    ------
    BadParamsError
        If `n` < 1, `p` is outside [0, 1], or `max_retries` < 1
    NotConnectedAfterRetriesError
        If none of the samples was connected

    """
    if n < 1 or not 0.0 <= p <= 1.0 or max_retries < 1:
        raise BadParamsError(' '.join(('need n >= 1, 0 <= p <= 1 and',
                                       'max_retries >= 1, got',
                                       'n={:}, p={:},'.format(n, p),
                                       'max_retries={:}'.format(max_retries))))

    rng = SplitMix64(seed)
    pairs = list(itertools.combinations(range(n), 2))
    for attempt in range(max_retries):
        graph = build_graph(n, [pair for pair in pairs if rng.random() < p])
        if is_connected(graph):
            return graph

    raise NotConnectedAfterRetriesError(
        'G({:d}, {:}) not connected after {:d} samples (seed={:})'.format(
            n, p, max_retries, seed))


def enumerate_connected_graphs(n):
    """Yield every connected labelled simple graph on `n` vertices.

    Parameters
    ----------
    n : int
        Number of vertices, from 1 to `MAX_ENUMERATION_ORDER`

    Yields
    ------
    Graph
        Connected graphs, in increasing order of the edge-subset code where
        bit i marks pair i of `itertools.combinations(range(n), 2)`

    Raises
    ------
    BadParamsError
        If `n` is outside [1, `MAX_ENUMERATION_ORDER`]

    """
    if n < 1 or n > MAX_ENUMERATION_ORDER:
        raise BadParamsError('enumeration needs 1 <= n <= {:d}, got {:}'.format(
            MAX_ENUMERATION_ORDER, n))

    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1

    for code in range(1 << len(pairs)):
        adj = [0] * n
        edges = list()
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                edges.append((u, v))

        # Breadth-first closure from vertex 0
        reach = 1
        frontier = 1
        while frontier:
            nbrs = 0
            while frontier:
                low = frontier & -frontier
                nbrs |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nbrs & ~reach
            reach |= nbrs

        if reach == full:
            yield build_graph(n, edges)
