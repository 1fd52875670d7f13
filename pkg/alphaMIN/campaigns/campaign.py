#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Seeded experiment campaigns over graph families.

A campaign walks a grid of cells (a family plus its size parameters), builds
every instance, solves alpha exactly when the size allows, runs MIN, evaluates
the three bounds, and checks the derivation links.  The result is one CSV row
per instance and an aligned per-cell summary.

Campaign files are flat TOML documents, e.g.::

    family = "gnm"
    n = [10, 12]
    m = [15]
    instances = 100
    seed = 7
    policy = "lowest"

Note
----
Instance `i` of a campaign is seeded with `derive_seed(seed, i)`, so rows do
not depend on the order in which instances are processed.

"""

import dataclasses

import numpy as np
import pandas as pds

import pysat

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from alphaMIN.errors import BadParamsError
from alphaMIN.errors import NonpositiveDenominatorError
from alphaMIN.errors import NotConnectedAfterRetriesError
from alphaMIN.graphs import generators
from alphaMIN.methods import bounds
from alphaMIN.methods import chain
from alphaMIN.methods import min_greedy
from alphaMIN.methods.exact import solve_alpha

csv_columns = ['id', 'n', 'm', 'seed', 'alpha', 'k_run', 'k_min',
               'k_min_exact', 'harant', 'harant_status', 'claimed',
               'claimed_status', 'repaired', 'repaired_status', 'edge_sum',
               'ineq2', 'ineq2_corr', 'ineq1', 'claimed_valid',
               'repaired_valid', 'harant_valid']

campaign_families = ['gnm', 'gnp', 'exhaustive', 'path', 'cycle', 'complete',
                     'star']
campaign_policies = ['lowest', 'random', 'exhaustive']

bound_kinds = ['harant', 'claimed', 'repaired']

DEFAULT_ALPHA_BUDGET = 60


def _as_tuple(value):
    """Wrap a scalar in a tuple and convert any list to a tuple."""
    if value is None:
        return ()
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return (value, )


@dataclasses.dataclass(frozen=True)
class CampaignSpec(object):
    """Declarative description of a campaign.

    Parameters
    ----------
    family : str
        One of `campaign_families`
    n : tuple of int
        Vertex counts
    m : tuple of int
        Edge counts for 'gnm' (default=())
    density : tuple of float
        Edges per vertex for 'gnm', each giving m = round(density * n)
        clipped to the connected range (default=())
    p : tuple of float
        Edge probabilities for 'gnp' (default=())
    instances : int
        Instances per random cell (default=1)
    seed : int
        Campaign seed (default=0)
    policy : str
        'lowest', 'random', or 'exhaustive' (default='lowest')
    alpha_budget : int
        Largest n solved exactly for alpha (default=60)
    kmin_budget : int
        Largest n for which k_MIN is found exhaustively; larger graphs use a
        randomized multistart estimate (default=14)
    restarts : int
        Restarts of the k_MIN estimate (default=8)
    enumeration_cutoff : int
        Largest n solved by subset enumeration rather than branch and bound
        (default=16)
    max_retries : int
        G(n, p) samples drawn per instance before giving up (default=100)

    """

    family: str
    n: tuple
    m: tuple = ()
    density: tuple = ()
    p: tuple = ()
    instances: int = 1
    seed: int = 0
    policy: str = 'lowest'
    alpha_budget: int = DEFAULT_ALPHA_BUDGET
    kmin_budget: int = min_greedy.DEFAULT_KMIN_BUDGET
    restarts: int = 8
    enumeration_cutoff: int = 16
    max_retries: int = 100

    def __post_init__(self):
        """Normalize list fields and validate the spec."""
        for field in ('n', 'm', 'density', 'p'):
            object.__setattr__(self, field, _as_tuple(getattr(self, field)))

        if self.family not in campaign_families:
            raise BadParamsError('unknown campaign family: {:}'.format(
                self.family))
        if self.policy not in campaign_policies:
            raise BadParamsError('unknown campaign policy: {:}'.format(
                self.policy))
        if len(self.n) == 0 or any(int(nval) < 1 for nval in self.n):
            raise BadParamsError('n must list positive vertex counts, '
                                 'got {:}'.format(self.n))
        if self.family == 'gnm' and len(self.m) + len(self.density) == 0:
            raise BadParamsError('a gnm campaign needs `m` or `density`')
        if self.family == 'gnp' and len(self.p) == 0:
            raise BadParamsError('a gnp campaign needs `p`')
        if self.family == 'exhaustive' and max(self.n) > \
                generators.MAX_ENUMERATION_ORDER:
            raise BadParamsError('exhaustive campaigns need n <= {:d}'.format(
                generators.MAX_ENUMERATION_ORDER))
        if self.instances < 1 or self.restarts < 1 or self.max_retries < 1:
            raise BadParamsError('instances, restarts, and max_retries must '
                                 'be at least 1')
        return

    @classmethod
    def from_dict(cls, params):
        """Build a spec from a flat mapping, rejecting unknown keys.

        Parameters
        ----------
        params : dict
            Keys named after the `CampaignSpec` fields

        Returns
        -------
        CampaignSpec

        """
        known = [field.name for field in dataclasses.fields(cls)]
        unknown = sorted(set(params.keys()).difference(known))
        if len(unknown) > 0:
            raise BadParamsError('unknown campaign keys: {:}'.format(
                ', '.join(unknown)))
        if 'family' not in params or 'n' not in params:
            raise BadParamsError('campaign needs `family` and `n`')

        return cls(**params)

    @classmethod
    def from_file(cls, path):
        """Load a spec from a TOML file.

        Parameters
        ----------
        path : str
            Campaign file

        Returns
        -------
        CampaignSpec

        """
        with open(path, 'rb') as fin:
            params = tomllib.load(fin)
        return cls.from_dict(params)

    def to_dict(self):
        """Return the spec as a flat mapping with list-valued grids."""
        out = dataclasses.asdict(self)
        for field in ('n', 'm', 'density', 'p'):
            out[field] = list(out[field])
        return out


@dataclasses.dataclass(frozen=True)
class CampaignRow(object):
    """Measurements for one campaign instance.

    Parameters
    ----------
    cell : str
        Label of the grid cell holding the instance
    values : dict
        Formatted CSV value for every name in `csv_columns`
    gaps : dict
        Tightness gap alpha - ceil(bound) for each real bound, when alpha is
        known

    """

    cell: str
    values: dict
    gaps: dict

    def __getitem__(self, key):
        """Return a formatted CSV value."""
        return self.values[key]


@dataclasses.dataclass(frozen=True)
class CampaignResult(object):
    """Rows and rendered outputs of a campaign.

    Parameters
    ----------
    rows : tuple of CampaignRow
        Rows in instance-id order
    csv_text : str
        CSV document with the `csv_columns` header
    summary_text : str
        Aligned per-cell summary table

    """

    rows: tuple
    csv_text: str
    summary_text: str


def _cells(spec):
    """List the grid cells of a campaign.

    Parameters
    ----------
    spec : CampaignSpec
        Campaign description

    Returns
    -------
    list of tuple
        Each entry holds a cell label, the number of instances, and a function
        that takes an instance id and seed and returns a graph

    """
    cells = list()
    for nval in spec.n:
        nval = int(nval)
        total = nval * (nval - 1) // 2

        if spec.family == 'gnm':
            mvals = [int(mval) for mval in spec.m]
            mvals.extend([min(max(int(round(dens * nval)), nval - 1), total)
                          for dens in spec.density])
            for mval in mvals:
                cells.append(('gnm n={:d} m={:d}'.format(nval, mval),
                              spec.instances,
                              lambda num, sd, nn=nval, mm=mval:
                              generators.gen_gnm_connected(nn, mm, sd)))
        elif spec.family == 'gnp':
            for prob in spec.p:
                cells.append(('gnp n={:d} p={:}'.format(nval, prob),
                              spec.instances,
                              lambda num, sd, nn=nval, pp=float(prob):
                              generators.gen_gnp_connected(
                                  nn, pp, sd, max_retries=spec.max_retries)))
        elif spec.family == 'exhaustive':
            graphs = generators.enumerate_connected_graphs(nval)
            cells.append(('exhaustive n={:d}'.format(nval),
                          generators.connected_counts[nval],
                          lambda num, sd, gen=graphs: next(gen)))
        else:
            params = [nval - 1] if spec.family == 'star' else [nval]
            cells.append(('{:s} n={:d}'.format(spec.family, nval), 1,
                          lambda num, sd, fam=spec.family, par=params:
                          generators.gen_named(fam, *par)))

    return cells


def _instances(spec):
    """Yield (cell, instance id, seed, graph) over the whole campaign."""
    inst_id = 0
    for label, count, factory in _cells(spec):
        pysat.logger.info('campaign cell {:s}: {:d} instance(s)'.format(
            label, count))
        for num in range(count):
            seed = generators.derive_seed(spec.seed, inst_id)
            try:
                yield label, inst_id, seed, factory(num, seed)
            except NotConnectedAfterRetriesError as err:
                pysat.logger.warning('skipping instance {:d}: {:}'.format(
                    inst_id, err))
            inst_id += 1

    return


def _k_min(graph, spec, seed):
    """Return (k_min, witness, exact flag) for an instance."""
    if graph.n <= spec.kmin_budget:
        k_min, witness = min_greedy.k_min_exhaustive(graph, spec.kmin_budget)
        return k_min, witness, True

    k_min, witness = min_greedy.k_min_multistart(
        graph, spec.restarts, generators.derive_seed(seed or 0, 2))
    return k_min, witness, False


def _run_trace(graph, spec, seed, kmin_witness):
    """Run MIN on an instance with the campaign tie-break policy."""
    if spec.policy == 'random':
        return min_greedy.run_min(graph, min_greedy.TieBreakPolicy(
            'random', generators.derive_seed(seed or 0, 1)))

    if spec.policy == 'exhaustive':
        if graph.n > spec.kmin_budget:
            pysat.logger.info(' '.join((
                'n={:d} is over the k_MIN'.format(graph.n),
                'budget, using the multistart witness')))
        return kmin_witness

    return min_greedy.run_min(graph)


def _format_value(value):
    """Format a bound value with fixed precision, or '' when absent."""
    return '' if value is None else '{:.6f}'.format(value)


def evaluate_instance(graph, spec, cell='', inst_id=0, seed=None):
    """Measure one campaign instance.

    Parameters
    ----------
    graph : Graph
        Connected instance
    spec : CampaignSpec
        Campaign description supplying the policy and budgets
    cell : str
        Cell label (default='')
    inst_id : int
        Instance id (default=0)
    seed : int or NoneType
        Instance seed, None for deterministic families (default=None)

    Returns
    -------
    CampaignRow

    Note
    ----
    Sanity failures, such as k_run > alpha or a Harant violation, are logged
    as errors and the row is kept.

    """
    values = {col: '' for col in csv_columns}
    values.update({'id': str(inst_id), 'n': str(graph.n), 'm': str(graph.m),
                   'seed': '' if seed is None else str(seed)})

    k_min, kmin_witness, kmin_exact = _k_min(graph, spec, seed)
    values['k_min'] = str(k_min)
    values['k_min_exact'] = 'true' if kmin_exact else 'false'

    trace = _run_trace(graph, spec, seed, kmin_witness)
    values['k_run'] = str(trace.k)

    alpha = None
    witness = None
    if graph.n <= spec.alpha_budget:
        result = solve_alpha(graph, spec.enumeration_cutoff)
        alpha = result.alpha
        witness = result.witness
        values['alpha'] = str(alpha)
    else:
        pysat.logger.warning(' '.join((
            'instance {:d} has n={:d}, over the alpha'.format(inst_id,
                                                              graph.n),
            'budget of {:d}; alpha is unknown'.format(spec.alpha_budget))))

    gaps = dict()
    for kind in bound_kinds:
        bound = bounds.evaluate_bound(kind, graph.n, graph.m)
        values[kind] = _format_value(bound.value)
        values['_'.join((kind, 'status'))] = bound.status
        if alpha is not None and bound.is_real:
            gaps[kind] = alpha - bound.ceil_value

            # Float and exact comparisons must agree away from equality
            exact = bounds.bound_holds_exact(kind, graph.n, graph.m, alpha)
            if (abs(bound.value - alpha) > 1.0e-9
                    and (bound.value <= alpha) != (exact == bounds.HOLDS)):
                pysat.logger.error(' '.join((
                    'instance {:d}: float and exact'.format(inst_id),
                    '{:s} checks disagree'.format(kind))))

    if alpha is not None:
        report = chain.verify_chain(graph, trace, witness, alpha=alpha)
        values.update(chain.report_to_row(report))

        if trace.k > alpha:
            pysat.logger.error('instance {:d}: k_run={:d} > alpha={:d}'.format(
                inst_id, trace.k, alpha))
        if values['harant_valid'] == chain.VIOLATED:
            pysat.logger.error('instance {:d}: Harant bound violated'.format(
                inst_id))
    else:
        try:
            rhs = bounds.inequality1_rhs(trace, graph)
            values['ineq1'] = chain.HOLDS if trace.k >= rhs else \
                chain.VIOLATED
        except NonpositiveDenominatorError:
            values['ineq1'] = chain.NOT_APPLICABLE

    return CampaignRow(cell, values, gaps)


def rows_to_frame(rows):
    """Collect campaign rows in a DataFrame with the CSV column order.

    Parameters
    ----------
    rows : list-like of CampaignRow
        Campaign rows

    Returns
    -------
    pds.DataFrame
        String-valued frame with `csv_columns` as columns

    """
    return pds.DataFrame([row.values for row in rows], columns=csv_columns,
                         dtype=str)


def format_csv(rows):
    """Render rows as a CSV document.

    Parameters
    ----------
    rows : list-like of CampaignRow
        Campaign rows

    Returns
    -------
    str
        CSV with the fixed header and '\\n' line endings

    """
    return rows_to_frame(rows).to_csv(index=False, lineterminator='\n')


def summarize(rows):
    """Aggregate campaign rows per cell.

    Parameters
    ----------
    rows : list-like of CampaignRow
        Campaign rows

    Returns
    -------
    pds.DataFrame
        One row per cell, in campaign order, holding the instance count, the
        number of rows with a known alpha, violation counts per link column,
        not_real counts per bound, and the mean tightness gap per bound over
        rows with a known alpha and a real bound

    """
    if len(rows) == 0:
        return pds.DataFrame()

    link_cols = list(chain.row_links.keys())
    data = rows_to_frame(rows)
    data['cell'] = [row.cell for row in rows]
    for kind in bound_kinds:
        data['gap_' + kind] = [row.gaps.get(kind, np.nan) for row in rows]

    groups = data.groupby('cell', sort=False)
    summary = pds.DataFrame({'instances': groups.size(),
                             'alpha_known': groups['alpha'].agg(
                                 lambda vals: int((vals != '').sum()))})
    for col in link_cols:
        summary['viol_' + col] = groups[col].agg(
            lambda vals: int((vals == chain.VIOLATED).sum()))
    for kind in bound_kinds:
        summary['not_real_' + kind] = groups[kind + '_status'].agg(
            lambda vals: int((vals == bounds.NOT_REAL).sum()))
    for kind in bound_kinds:
        summary['gap_' + kind] = groups['gap_' + kind].mean()

    summary.index.name = 'cell'
    return summary


def format_summary(summary):
    """Render a summary frame as aligned text."""
    if summary.shape[0] == 0:
        return 'no instances\n'
    return summary.to_string(float_format=lambda val: '{:.4f}'.format(val),
                             na_rep='-') + '\n'


def run_campaign(spec):
    """Run every instance of a campaign.

    Parameters
    ----------
    spec : CampaignSpec
        Campaign description

    Returns
    -------
    CampaignResult
        Rows ordered by instance id with the CSV and summary renderings

    Examples
    --------
    ::

        spec = CampaignSpec('gnm', n=[10], m=[15], instances=100, seed=7)
        result = run_campaign(spec)
        print(result.summary_text)

    """
    rows = list()
    for cell, inst_id, seed, graph in _instances(spec):
        rows.append(evaluate_instance(graph, spec, cell, inst_id, seed))

    pysat.logger.info('campaign finished with {:d} rows'.format(len(rows)))

    return CampaignResult(tuple(rows), format_csv(rows),
                          format_summary(summarize(rows)))


def write_campaign(result, out_path):
    """Write the campaign CSV to disk.

    Parameters
    ----------
    result : CampaignResult
        Finished campaign
    out_path : str
        CSV file to write

    """
    with open(out_path, 'w', encoding='utf-8', newline='') as fout:
        fout.write(result.csv_text)

    return
