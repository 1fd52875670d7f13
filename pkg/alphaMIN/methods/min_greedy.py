#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""The MIN greedy independent-set algorithm, its traces, and k_MIN.

MIN repeatedly chooses a vertex of minimum degree in the remaining graph,
adds it to the independent set, and deletes it together with its neighbours.
The number of iterations, k, is the size of the independent set found.  How
ties between minimum-degree vertices are broken is left open by the algorithm,
so it is exposed here as a `TieBreakPolicy`, and k_MIN is the smallest k over
all tie-breaking choices.

"""

import dataclasses
import heapq

import pysat

from alphaMIN.errors import BadParamsError
from alphaMIN.errors import BudgetExceededError
from alphaMIN.graphs.core import popcount
from alphaMIN.graphs.core import mask_to_vertices
from alphaMIN.graphs.generators import SplitMix64
from alphaMIN.graphs.generators import derive_seed

DEFAULT_KMIN_BUDGET = 14

policy_kinds = ['lowest_index', 'random', 'exhaustive']


@dataclasses.dataclass(frozen=True)
class TieBreakPolicy(object):
    """Rule for choosing among minimum-degree vertices.

    Parameters
    ----------
    kind : str
        'lowest_index' takes the smallest vertex id; 'random' ranks vertices
        by a `SplitMix64` priority drawn from `seed`; 'exhaustive' explores
        every choice and is only understood by `k_min_exhaustive`
    seed : int
        Seed for the 'random' kind (default=0)

    """

    kind: str = 'lowest_index'
    seed: int = 0

    def __post_init__(self):
        """Validate the policy kind."""
        if self.kind not in policy_kinds:
            raise BadParamsError('unknown tie-break policy: {:}'.format(
                self.kind))

    def describe(self):
        """Return a short text label, e.g. 'random(7)'."""
        if self.kind == 'random':
            return 'random({:d})'.format(self.seed)
        return self.kind


@dataclasses.dataclass(frozen=True)
class MinIteration(object):
    """One iteration of MIN, in original vertex ids.

    Parameters
    ----------
    chosen_vertex : int
        Vertex i_j chosen at this iteration
    chosen_degree : int
        Degree of i_j in the remaining graph G_j
    deleted_vertices : tuple of int
        Closed neighbourhood of i_j in G_j, ascending
    edges_removed : int
        Edges of G_j with at least one endpoint in `deleted_vertices`

    """

    chosen_vertex: int
    chosen_degree: int
    deleted_vertices: tuple
    edges_removed: int


@dataclasses.dataclass(frozen=True)
class MinTrace(object):
    """Complete record of one MIN run.

    Parameters
    ----------
    iterations : tuple of MinIteration
        Iterations in the order they ran
    policy : str
        Description of the tie-break rule that produced the run (default='')

    """

    iterations: tuple
    policy: str = ''

    @property
    def k(self):
        """Number of iterations, equal to the independent set size."""
        return len(self.iterations)

    @property
    def selected_set(self):
        """Chosen vertices {i_1, ..., i_k}, ascending."""
        return tuple(sorted(it.chosen_vertex for it in self.iterations))

    @property
    def degrees(self):
        """Chosen degrees d_1, ..., d_k in iteration order."""
        return [it.chosen_degree for it in self.iterations]


def _priorities(n, policy):
    """Return the tie-break rank of every vertex for a policy."""
    if policy.kind == 'lowest_index':
        return list(range(n))
    if policy.kind == 'random':
        rng = SplitMix64(policy.seed)
        return [rng.next_u64() for _ in range(n)]
    raise BadParamsError(' '.join(('run_min needs a lowest_index or random',
                                   'policy; use k_min_exhaustive for the',
                                   'exhaustive policy')))


def run_min(g, policy=None):
    """Run MIN to completion and record every iteration.

    Parameters
    ----------
    g : Graph
        Input graph; disconnected and empty graphs are accepted
    policy : TieBreakPolicy or NoneType
        Tie-break rule, 'lowest_index' or 'random'.  None selects
        'lowest_index'. (default=None)

    Returns
    -------
    MinTrace

    Note
    ----
    Degrees are updated in place on the original graph and minimum-degree
    vertices are found with a lazily pruned heap keyed on (degree, priority,
    vertex), so a run takes O((n + m) log n) time.

    """
    if policy is None:
        policy = TieBreakPolicy()

    prio = _priorities(g.n, policy)
    adj = g.neighbor_lists
    deg = g.degrees.tolist()
    alive = bytearray(b'\x01') * g.n

    heap = [(deg[v], prio[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    push = heapq.heappush
    pop = heapq.heappop

    iterations = list()
    while heap:
        d_v, _, v = pop(heap)
        if not alive[v] or d_v != deg[v]:
            continue

        closed = [v] + [u for u in adj[v] if alive[u]]
        deg_sum = 0
        for w in closed:
            alive[w] = 0
            deg_sum += deg[w]

        # Edges leaving the deleted set update the survivors
        cross = 0
        for w in closed:
            for x in adj[w]:
                if alive[x]:
                    cross += 1
                    deg[x] -= 1
                    push(heap, (deg[x], prio[x], x))

        removed = cross + (deg_sum - cross) // 2
        iterations.append(MinIteration(v, d_v, tuple(sorted(closed)), removed))

    return MinTrace(tuple(iterations), policy.describe())


def format_trace(trace):
    """Render a trace as a deterministic CSV block.

    Parameters
    ----------
    trace : MinTrace
        Trace to render

    Returns
    -------
    str
        Header 'j,vertex,degree,deleted,edges_removed' and one line per
        iteration, with the deleted set space-separated

    """
    lines = ['j,vertex,degree,deleted,edges_removed']
    for j, it in enumerate(trace.iterations, start=1):
        lines.append('{:d},{:d},{:d},{:s},{:d}'.format(
            j, it.chosen_vertex, it.chosen_degree,
            ' '.join(str(v) for v in it.deleted_vertices), it.edges_removed))
    return '\n'.join(lines) + '\n'


def _edge_count(adj_masks, mask):
    """Count the edges of the subgraph induced by a vertex bitmask."""
    total = 0
    for v in mask_to_vertices(mask):
        total += popcount(adj_masks[v] & mask)
    return total // 2


def k_min_exhaustive(g, vertex_budget=DEFAULT_KMIN_BUDGET):
    """Find the fewest MIN iterations over every tie-breaking choice.

    Parameters
    ----------
    g : Graph
        Input graph
    vertex_budget : int
        Largest vertex count accepted (default=14)

    Returns
    -------
    k_min : int
        Smallest iteration count MIN can produce on `g`
    witness : MinTrace
        A run achieving `k_min`, taking the lowest-index vertex among
        equally good choices

    Raises
    ------
    BudgetExceededError
        If `g` has more than `vertex_budget` vertices

    Note
    ----
    Every minimum-degree vertex of every reachable remaining graph is tried,
    with results memoized on the bitmask of surviving vertices.

    """
    if g.n > vertex_budget:
        raise BudgetExceededError(g.n, vertex_budget)

    adj = g.adjacency_masks
    closed_nbhd = [adj[v] | (1 << v) for v in range(g.n)]
    memo = {0: (0, None)}

    def best_from(rem):
        if rem in memo:
            return memo[rem][0]

        verts = mask_to_vertices(rem)
        degs = [popcount(adj[v] & rem) for v in verts]
        low = min(degs)

        best = None
        for v, d_v in zip(verts, degs):
            if d_v == low:
                k_sub = 1 + best_from(rem & ~closed_nbhd[v])
                if best is None or k_sub < best[0]:
                    best = (k_sub, v)

        memo[rem] = best
        return best[0]

    full = (1 << g.n) - 1
    k_min = best_from(full)

    # Rebuild a witness run from the memoized choices
    iterations = list()
    rem = full
    while rem:
        v = memo[rem][1]
        nxt = rem & ~closed_nbhd[v]
        iterations.append(MinIteration(
            v, popcount(adj[v] & rem), tuple(mask_to_vertices(rem & ~nxt)),
            _edge_count(adj, rem) - _edge_count(adj, nxt)))
        rem = nxt

    return k_min, MinTrace(tuple(iterations), 'exhaustive')


def k_min_multistart(g, restarts, seed):
    """Estimate k_MIN from above with randomized restarts.

    Parameters
    ----------
    g : Graph
        Input graph
    restarts : int
        Number of randomized runs, at least 1
    seed : int
        Parent seed; restart r uses `derive_seed(seed, r)`

    Returns
    -------
    best_k : int
        Smallest k seen, never below the true k_MIN
    witness : MinTrace
        Run achieving `best_k`, from the lowest restart index that did

    """
    if restarts < 1:
        raise BadParamsError('restarts must be at least 1, got {:}'.format(
            restarts))

    best = None
    for rnum in range(restarts):
        trace = run_min(g, TieBreakPolicy('random', derive_seed(seed, rnum)))
        if best is None or trace.k < best.k:
            best = trace

    pysat.logger.info('best k over {:d} restarts: {:d}'.format(restarts,
                                                                best.k))
    return best.k, best
