#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Command-line front end.

Subcommands
-----------
gen
    Write a named or random graph as DIMACS or an edge list
parse
    Validate a graph file, optionally converting it with ``--to``
run-min
    Print the MIN trace of a graph
alpha
    Print the independence number and a witness
bounds
    Print the three closed-form bounds for given n and m, or for a graph
verify-chain
    Print the derivation links for one maximum set, or all with ``--all-x``
campaign
    Run a campaign from a TOML file or from flags

Exit codes are 0 on success, 1 on a usage error, and 2 on an input error.

"""

import argparse
import logging
import sys

import pysat

from alphaMIN.campaigns import campaign
from alphaMIN.graphs import generators
from alphaMIN.graphs import io as gio
from alphaMIN.methods import bounds
from alphaMIN.methods import chain
from alphaMIN.methods import exact
from alphaMIN.methods import min_greedy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as exceptions."""

    def error(self, message):
        """Raise `UsageError` with the parser message."""
        raise UsageError('{:s}: {:s}'.format(self.prog, message))


def _add_graph_input(parser):
    """Add the graph file argument and its format flag."""
    parser.add_argument('graph', help='graph file to read')
    parser.add_argument('--format', choices=gio.formats, default=None,
                        help='file format; guessed from the extension if '
                        'omitted')
    return


def _add_policy(parser):
    """Add the MIN tie-break flags."""
    parser.add_argument('--policy', choices=['lowest', 'random', 'exhaustive'],
                        default='lowest',
                        help='tie-break rule; exhaustive runs a k_MIN witness')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed of the random tie-break rule')
    return


def build_parser():
    """Build the argument parser for every subcommand.

    Returns
    -------
    argparse.ArgumentParser

    """
    parser = _Parser(prog='alphaMIN', description=__doc__.splitlines()[0])
    parser.add_argument('--verbose', action='store_true',
                        help='log progress at the INFO level')
    subs = parser.add_subparsers(dest='command', parser_class=_Parser)
    subs.required = True

    gen = subs.add_parser('gen', help='write a graph')
    gen.add_argument('--family', required=True,
                     choices=sorted(generators.named_families.keys())
                     + ['gnm', 'gnp'])
    gen.add_argument('--n', type=int, default=None,
                     help='vertices (leaves for star)')
    gen.add_argument('--m', type=int, default=None, help='edges for gnm')
    gen.add_argument('--p', type=float, default=None,
                     help='edge probability for gnp')
    gen.add_argument('--sides', type=int, nargs=2, default=None,
                     metavar=('A', 'B'),
                     help='side sizes for complete_bipartite')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--format', choices=gio.formats, default='dimacs')
    gen.add_argument('--out', default=None,
                     help='output file; standard output if omitted')

    parse = subs.add_parser('parse', help='validate or convert a graph')
    _add_graph_input(parse)
    parse.add_argument('--to', choices=gio.formats, default=None,
                       help='convert to this format')
    parse.add_argument('--out', default=None)

    run = subs.add_parser('run-min', help='print a MIN trace')
    _add_graph_input(run)
    _add_policy(run)

    alpha = subs.add_parser('alpha', help='print alpha and a witness')
    _add_graph_input(alpha)
    alpha.add_argument('--enumeration-cutoff', type=int, default=16)

    bnd = subs.add_parser('bounds', help='print the closed-form bounds')
    bnd.add_argument('graph', nargs='?', default=None)
    bnd.add_argument('--format', choices=gio.formats, default=None)
    bnd.add_argument('--n', type=int, default=None)
    bnd.add_argument('--m', type=int, default=None)

    ver = subs.add_parser('verify-chain', help='check the derivation links')
    _add_graph_input(ver)
    _add_policy(ver)
    ver.add_argument('--x', type=int, nargs='+', default=None,
                     help='maximum independent set to use; the exact '
                     'witness if omitted')
    ver.add_argument('--all-x', action='store_true',
                     help='check every maximum independent set')

    camp = subs.add_parser('campaign', help='run a campaign')
    camp.add_argument('--spec', default=None, help='TOML campaign file')
    camp.add_argument('--family', choices=campaign.campaign_families)
    camp.add_argument('--n', type=int, nargs='+')
    camp.add_argument('--m', type=int, nargs='+')
    camp.add_argument('--density', type=float, nargs='+')
    camp.add_argument('--p', type=float, nargs='+')
    camp.add_argument('--seed', type=int)
    camp.add_argument('--instances', type=int)
    camp.add_argument('--policy', choices=campaign.campaign_policies)
    camp.add_argument('--alpha-budget', type=int)
    camp.add_argument('--kmin-budget', type=int)
    camp.add_argument('--out', default=None,
                      help='CSV file; standard output if omitted')

    return parser


def _read(args):
    """Read the graph document named on the command line."""
    return gio.read_graph(args.graph, fmt=args.format)


def _trace(args, graph):
    """Run MIN on a graph with the tie-break rule named by the flags."""
    if args.policy == 'exhaustive':
        return min_greedy.k_min_exhaustive(graph)[1]
    if args.policy == 'random':
        return min_greedy.run_min(graph, min_greedy.TieBreakPolicy(
            'random', args.seed))
    return min_greedy.run_min(graph)


def _emit_document(doc, fmt, out_path, stdout):
    """Write a graph document to a file or to standard output."""
    if out_path is None:
        stdout.write(gio.serializers[fmt](doc).decode('utf-8'))
    else:
        gio.write_graph(doc, out_path, fmt=fmt)
    return


def _cmd_gen(args, stdout):
    """Generate a graph."""
    fam = args.family
    if fam == 'complete_bipartite':
        if args.sides is None:
            raise UsageError('gen: complete_bipartite needs --sides A B')
        graph = generators.gen_named(fam, *args.sides)
    elif fam == 'petersen':
        graph = generators.gen_named(fam)
    else:
        if args.n is None:
            raise UsageError('gen: {:s} needs --n'.format(fam))
        if fam == 'gnm':
            if args.m is None:
                raise UsageError('gen: gnm needs --m')
            graph = generators.gen_gnm_connected(args.n, args.m, args.seed)
        elif fam == 'gnp':
            if args.p is None:
                raise UsageError('gen: gnp needs --p')
            graph = generators.gen_gnp_connected(args.n, args.p, args.seed)
        else:
            graph = generators.gen_named(fam, args.n)

    doc = gio.GraphDocument(graph, ('generated by alphaMIN gen',), args.format)
    _emit_document(doc, args.format, args.out, stdout)
    return EXIT_OK


def _cmd_parse(args, stdout):
    """Validate a graph file and optionally convert it."""
    doc = _read(args)
    if args.to is None:
        stdout.write('n={:d} m={:d} format={:s}\n'.format(
            doc.graph.n, doc.graph.m, doc.source_format))
        for warn in doc.warnings:
            stdout.write('warning: {:s}\n'.format(warn))
    else:
        _emit_document(doc, args.to, args.out, stdout)
    return EXIT_OK


def _cmd_run_min(args, stdout):
    """Print a MIN trace."""
    doc = _read(args)
    trace = _trace(args, doc.graph)
    stdout.write(min_greedy.format_trace(trace))
    return EXIT_OK


def _cmd_alpha(args, stdout):
    """Print the independence number."""
    doc = _read(args)
    result = exact.solve_alpha(doc.graph, args.enumeration_cutoff)
    stdout.write('alpha={:d} witness={:s} method={:s}\n'.format(
        result.alpha, ' '.join(str(v) for v in result.witness),
        result.method))
    return EXIT_OK


def _cmd_bounds(args, stdout):
    """Print the three bounds."""
    if args.graph is not None:
        graph = gio.read_graph(args.graph, fmt=args.format).graph
        n_verts, n_edges = graph.n, graph.m
    elif args.n is None or args.m is None:
        raise UsageError('bounds: give a graph file or both --n and --m')
    else:
        n_verts, n_edges = args.n, args.m

    for kind in campaign.bound_kinds:
        bound = bounds.evaluate_bound(kind, n_verts, n_edges)
        line = 'kind={:s} status={:s} value={:s} ceil={:s} disc={:d}'.format(
            kind, bound.status, '-' if bound.value is None
            else repr(bound.value),
            '-' if bound.ceil_value is None else str(bound.ceil_value),
            bound.discriminant)
        if bounds.origins[kind] == 'derived':
            line = ' '.join((line, 'origin=derived'))
        stdout.write(line + '\n')
    return EXIT_OK


def _cmd_verify_chain(args, stdout):
    """Print the derivation links."""
    graph = _read(args).graph
    trace = _trace(args, graph)

    if args.all_x:
        stdout.write(chain.format_summary(chain.verify_chain_all_X(graph,
                                                                   trace)))
    else:
        xset = args.x
        if xset is None:
            xset = exact.solve_alpha(graph).witness
        stdout.write(chain.format_report(chain.verify_chain(graph, trace,
                                                            xset)))
    return EXIT_OK


def _campaign_spec(args):
    """Build a campaign spec from a file or from flags."""
    if args.spec is not None:
        return campaign.CampaignSpec.from_file(args.spec)
    if args.family is None or args.n is None:
        raise UsageError('campaign: give --spec or at least --family and --n')

    flags = {'family': args.family, 'n': args.n, 'm': args.m,
             'density': args.density, 'p': args.p, 'seed': args.seed,
             'instances': args.instances, 'policy': args.policy,
             'alpha_budget': args.alpha_budget,
             'kmin_budget': args.kmin_budget}
    return campaign.CampaignSpec.from_dict(
        {key: val for key, val in flags.items() if val is not None})


def _cmd_campaign(args, stdout):
    """Run a campaign."""
    result = campaign.run_campaign(_campaign_spec(args))
    if args.out is None:
        stdout.write(result.csv_text)
    else:
        campaign.write_campaign(result, args.out)
        stdout.write(result.summary_text)
    return EXIT_OK


commands = {'gen': _cmd_gen, 'parse': _cmd_parse, 'run-min': _cmd_run_min,
            'alpha': _cmd_alpha, 'bounds': _cmd_bounds,
            'verify-chain': _cmd_verify_chain, 'campaign': _cmd_campaign}


def cli_dispatch(argv, stdout=None, stderr=None):
    """Run one command line.

    Parameters
    ----------
    argv : list of str
        Arguments, without the program name
    stdout : file-like or NoneType
        Stream for results; `sys.stdout` if None (default=None)
    stderr : file-like or NoneType
        Stream for error messages; `sys.stderr` if None (default=None)

    Returns
    -------
    int
        0 on success, 1 on a usage error, 2 on an input error

    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    user_level = pysat.logger.level
    try:
        args = build_parser().parse_args(argv)
        pysat.logger.setLevel(logging.INFO if args.verbose
                              else logging.WARNING)
        return commands[args.command](args, stdout)
    except UsageError as err:
        stderr.write('usage error: {:}\n'.format(err))
        return EXIT_USAGE
    except SystemExit as err:
        # argparse exits directly for --help
        return EXIT_OK if err.code in (None, 0) else EXIT_USAGE
    except (ValueError, OSError) as err:
        stderr.write('alphaMIN: error: {:}\n'.format(err))
        return EXIT_INPUT
    finally:
        pysat.logger.setLevel(user_level)


def main():
    """Entry point for the `alphaMIN` console script."""
    sys.exit(cli_dispatch(sys.argv[1:]))
