#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Check each inequality of the MIN lower-bound derivation on concrete runs.

The derivation counts the edges deleted at every iteration j of a MIN run.
With d_j the degree of the chosen vertex and k_j the number of deleted
vertices that belong to a maximum independent set X, iteration j removes at
least ``C(1 + d_j, 2) + C(k_j, 2)`` edges, plus one more edge for j < k since
the graph is connected.  Summing gives the edge-sum link, which is then
turned into the closed-form bounds through the remaining links:

=========================== ==============================================
link                        inequality
=========================== ==============================================
edge_sum_link               m >= sum of the per-iteration lower bounds
inequality2_link            2m >= 4k - 2 + sum (1 + d_j) d_j
inequality2_corrected_link  2m >= 2k - 2 + sum (1 + d_j) d_j
inequality1_link            k >= n**2 / (2m + n - degree excess)
claimed_bound_link          alpha >= claimed bound
repaired_bound_link         alpha >= repaired bound
harant_link                 alpha >= Harant bound
degree_excess_link          degree excess >= 4k - 2
quadratic_step_link         k >= n**2 / (2m + n + 2 - 4k)
harant_kmin_link            k >= Harant bound
=========================== ==============================================

Note
----
Every link is evaluated in integer or rational arithmetic.  A failed
inequality is recorded as 'violated' with a negative slack; it never raises.

"""

import dataclasses
from fractions import Fraction
from math import comb

from alphaMIN.errors import BadParamsError
from alphaMIN.errors import NonpositiveDenominatorError
from alphaMIN.errors import NotConnectedInputError
from alphaMIN.errors import NotMaximumSetError
from alphaMIN.graphs.core import is_connected
from alphaMIN.graphs.core import is_independent_set
from alphaMIN.methods import bounds
from alphaMIN.methods.exact import all_maximum_independent_sets
from alphaMIN.methods.exact import solve_alpha

HOLDS = 'holds'
VIOLATED = 'violated'
NOT_APPLICABLE = 'not_applicable'

# Links written to campaign rows, keyed by their CSV column
row_links = {'edge_sum': 'edge_sum_link', 'ineq2': 'inequality2_link',
             'ineq2_corr': 'inequality2_corrected_link',
             'ineq1': 'inequality1_link',
             'claimed_valid': 'claimed_bound_link',
             'repaired_valid': 'repaired_bound_link',
             'harant_valid': 'harant_link'}

link_names = ['edge_sum_link', 'inequality2_link',
              'inequality2_corrected_link', 'inequality1_link',
              'claimed_bound_link', 'repaired_bound_link', 'harant_link',
              'degree_excess_link', 'quadratic_step_link', 'harant_kmin_link']


@dataclasses.dataclass(frozen=True)
class ChainIteration(object):
    """Edge accounting for one MIN iteration.

    Parameters
    ----------
    j : int
        Iteration number, starting at 1
    chosen_degree : int
        d_j, the degree of the chosen vertex in G_j
    k_j : int
        Deleted vertices that belong to the maximum independent set
    edges_removed : int
        Edges the iteration actually deleted
    edges_lower_bound : int
        C(1 + d_j, 2) + C(k_j, 2), plus 1 when j < k

    """

    j: int
    chosen_degree: int
    k_j: int
    edges_removed: int
    edges_lower_bound: int


@dataclasses.dataclass(frozen=True)
class LinkResult(object):
    """Outcome of one inequality.

    Parameters
    ----------
    name : str
        Link name, one of `link_names`
    status : str
        'holds', 'violated', or 'not_applicable'
    slack : int, Fraction, or NoneType
        Left side minus right side, None when not applicable

    """

    name: str
    status: str
    slack: object = None


@dataclasses.dataclass(frozen=True)
class ChainReport(object):
    """Every link of the derivation for one run and one maximum set.

    Parameters
    ----------
    n : int
        Number of vertices
    m : int
        Number of edges
    alpha : int
        Independence number
    independent_set : tuple of int
        Maximum independent set X used for the k_j counts
    policy : str
        Tie-break description of the run
    iterations : tuple of ChainIteration
        Per-iteration accounting
    links : tuple of LinkResult
        Link outcomes in `link_names` order

    """

    n: int
    m: int
    alpha: int
    independent_set: tuple
    policy: str
    iterations: tuple
    links: tuple

    @property
    def k(self):
        """Number of iterations of the run."""
        return len(self.iterations)

    @property
    def k_sum(self):
        """Sum of k_j, equal to alpha."""
        return sum(it.k_j for it in self.iterations)

    @property
    def edges_removed_total(self):
        """Sum of the edges removed, equal to m."""
        return sum(it.edges_removed for it in self.iterations)

    def link(self, name):
        """Return the `LinkResult` called `name`."""
        for result in self.links:
            if result.name == name:
                return result
        raise KeyError(name)


@dataclasses.dataclass(frozen=True)
class AllSetsSummary(object):
    """Link verdicts over every maximum independent set.

    Parameters
    ----------
    reports : tuple of ChainReport
        One report per maximum set, in lexicographic order of the sets
    verdicts : dict
        Link name to 'holds_for_all', 'holds_for_some', 'violated_for_all',
        or 'not_applicable'

    """

    reports: tuple
    verdicts: dict


def _compare(name, slack):
    """Turn a slack into a `LinkResult`, holding when it is non-negative."""
    return LinkResult(name, HOLDS if slack >= 0 else VIOLATED, slack)


def _bound_link(name, kind, n, m, value):
    """Compare an integer with a closed-form bound.

    Parameters
    ----------
    name : str
        Link name
    kind : str
        Bound kind
    n : int
        Number of vertices
    m : int
        Number of edges
    value : int
        alpha or k, the left side of the inequality

    Returns
    -------
    LinkResult
        Slack is `value` minus the exact ceiling of the bound

    """
    status = bounds.bound_holds_exact(kind, n, m, value)
    if status == bounds.NOT_REAL:
        return LinkResult(name, NOT_APPLICABLE)
    bound = bounds.evaluate_bound(kind, n, m)
    return LinkResult(name, status, value - bound.ceil_value)


def _check_trace(g, trace):
    """Confirm the deleted sets of a trace partition the vertices of `g`."""
    seen = set()
    for it in trace.iterations:
        for v in it.deleted_vertices:
            if v < 0 or v >= g.n or v in seen:
                raise BadParamsError(
                    'trace does not partition the vertices of {:}'.format(
                        repr(g)))
            seen.add(v)

    if len(seen) != g.n:
        raise BadParamsError('trace leaves {:d} vertices undeleted'.format(
            g.n - len(seen)))
    return


def verify_chain(g, trace, independent_set, alpha=None):
    """Evaluate every link of the derivation for one run and one maximum set.

    Parameters
    ----------
    g : Graph
        Connected input graph
    trace : MinTrace
        Complete MIN run on `g`
    independent_set : iterable of int
        Maximum independent set X of `g`
    alpha : int or NoneType
        Known independence number of `g`; None solves for it (default=None)

    Returns
    -------
    ChainReport

    Raises
    ------
    NotConnectedInputError
        If `g` is empty or disconnected
    NotMaximumSetError
        If `independent_set` is not independent or smaller than alpha
    BadParamsError
        If the trace does not partition the vertices of `g`

    Examples
    --------
    ::

        g = alphaMIN.graphs.generators.gen_named('path', 4)
        trace = alphaMIN.methods.min_greedy.run_min(g)
        report = verify_chain(g, trace, [0, 2])
        report.link('inequality2_link').slack  # -4

    """
    if g.n == 0 or not is_connected(g):
        raise NotConnectedInputError(
            'chain verification needs a connected graph, got {:}'.format(
                repr(g)))

    xset = frozenset(int(v) for v in independent_set)
    if any(v < 0 or v >= g.n for v in xset):
        raise NotMaximumSetError('set {:} is not a vertex set of {:}'.format(
            sorted(xset), repr(g)))
    if not is_independent_set(g, xset):
        raise NotMaximumSetError('set {:} is not independent'.format(
            sorted(xset)))

    if alpha is None:
        alpha = solve_alpha(g).alpha
    if len(xset) != alpha:
        raise NotMaximumSetError('set {:} has size {:d}, alpha is {:d}'.format(
            sorted(xset), len(xset), alpha))

    _check_trace(g, trace)

    n_verts = g.n
    n_edges = g.m
    k_run = trace.k

    iterations = list()
    for j, it in enumerate(trace.iterations, start=1):
        k_j = len(xset.intersection(it.deleted_vertices))
        lower = comb(1 + it.chosen_degree, 2) + comb(k_j, 2)
        if j < k_run:
            lower += 1
        iterations.append(ChainIteration(j, it.chosen_degree, k_j,
                                         it.edges_removed, lower))

    deg_terms = sum((1 + it.chosen_degree) * it.chosen_degree
                    for it in iterations)
    excess = bounds.degree_excess(trace, g)

    links = [
        _compare('edge_sum_link',
                 n_edges - sum(it.edges_lower_bound for it in iterations)),
        _compare('inequality2_link',
                 2 * n_edges - (4 * k_run - 2 + deg_terms)),
        _compare('inequality2_corrected_link',
                 2 * n_edges - (2 * k_run - 2 + deg_terms))]

    try:
        links.append(_compare('inequality1_link',
                              k_run - bounds.inequality1_rhs(trace, g)))
    except NonpositiveDenominatorError:
        links.append(LinkResult('inequality1_link', NOT_APPLICABLE))

    links.extend([_bound_link('claimed_bound_link', 'claimed', n_verts,
                              n_edges, alpha),
                  _bound_link('repaired_bound_link', 'repaired', n_verts,
                              n_edges, alpha),
                  _bound_link('harant_link', 'harant', n_verts, n_edges,
                              alpha),
                  _compare('degree_excess_link', excess - (4 * k_run - 2))])

    quad = bounds.quadratic_step_rhs(k_run, n_verts, n_edges)
    if quad is None:
        links.append(LinkResult('quadratic_step_link', NOT_APPLICABLE))
    else:
        links.append(_compare('quadratic_step_link', k_run - quad))

    links.append(_bound_link('harant_kmin_link', 'harant', n_verts, n_edges,
                             k_run))

    return ChainReport(n_verts, n_edges, alpha, tuple(sorted(xset)),
                       trace.policy, tuple(iterations), tuple(links))


def verify_chain_all_X(g, trace):
    """Evaluate the derivation against every maximum independent set.

    Parameters
    ----------
    g : Graph
        Connected input graph within the `all_maximum_independent_sets`
        budget
    trace : MinTrace
        Complete MIN run on `g`

    Returns
    -------
    AllSetsSummary
        For each link, 'holds_for_all' when it holds for every applicable set,
        'violated_for_all' when it holds for none, 'holds_for_some' otherwise,
        and 'not_applicable' when no set could evaluate it

    Raises
    ------
    BudgetExceededError
        If `g` is too large to list every maximum set

    """
    max_sets = all_maximum_independent_sets(g)
    alpha = len(max_sets[0])
    reports = tuple(verify_chain(g, trace, xset, alpha=alpha)
                    for xset in max_sets)

    verdicts = dict()
    for name in link_names:
        statuses = [rep.link(name).status for rep in reports]
        applicable = [stat for stat in statuses if stat != NOT_APPLICABLE]
        if len(applicable) == 0:
            verdicts[name] = NOT_APPLICABLE
        elif all(stat == HOLDS for stat in applicable):
            verdicts[name] = 'holds_for_all'
        elif all(stat == VIOLATED for stat in applicable):
            verdicts[name] = 'violated_for_all'
        else:
            verdicts[name] = 'holds_for_some'

    return AllSetsSummary(reports, verdicts)


def _format_slack(slack):
    """Render an int or Fraction slack, or '-' when there is none."""
    return '-' if slack is None else str(slack)


def format_report(report):
    """Render a chain report as deterministic text.

    Parameters
    ----------
    report : ChainReport
        Report to render

    Returns
    -------
    str
        A summary line, one line per iteration, then one line per link of the
        form 'name status slack'

    """
    lines = ['n={:d} m={:d} k={:d} alpha={:d} X={:s} policy={:s}'.format(
        report.n, report.m, report.k, report.alpha,
        ' '.join(str(v) for v in report.independent_set), report.policy)]

    for it in report.iterations:
        lines.append(' '.join(('j={:d}'.format(it.j),
                               'd={:d}'.format(it.chosen_degree),
                               'k_j={:d}'.format(it.k_j),
                               'removed={:d}'.format(it.edges_removed),
                               'lower_bound={:d}'.format(
                                   it.edges_lower_bound))))

    for result in report.links:
        lines.append('{:s} {:s} {:s}'.format(result.name, result.status,
                                             _format_slack(result.slack)))

    return '\n'.join(lines) + '\n'


def report_to_row(report):
    """Extract the link statuses stored in campaign rows.

    Parameters
    ----------
    report : ChainReport
        Report to convert

    Returns
    -------
    dict
        CSV column name to link status

    """
    return {col: report.link(name).status for col, name in row_links.items()}


def format_summary(summary):
    """Render an all-sets summary as deterministic text.

    Parameters
    ----------
    summary : AllSetsSummary
        Summary to render

    Returns
    -------
    str
        One line per link: name, verdict, and the holds, violated, and
        not_applicable counts over the maximum sets

    """
    lines = ['maximum_sets={:d}'.format(len(summary.reports))]
    for name in link_names:
        statuses = [rep.link(name).status for rep in summary.reports]
        lines.append('{:s} {:s} holds={:d} violated={:d} '
                     'not_applicable={:d}'.format(
                         name, summary.verdicts[name], statuses.count(HOLDS),
                         statuses.count(VIOLATED),
                         statuses.count(NOT_APPLICABLE)))

    return '\n'.join(lines) + '\n'
