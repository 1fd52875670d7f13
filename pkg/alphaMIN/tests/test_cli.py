#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Unit tests for the command-line front end."""

import io
import logging
import os

import pytest

import pysat

from alphaMIN.campaigns import campaign
from alphaMIN.campaigns import cli


class TestCli(object):
    """Unit tests for `alphaMIN.campaigns.cli.cli_dispatch`."""

    def setup_method(self):
        """Set up the unit test environment for each method."""

        self.stdout = io.StringIO()
        self.stderr = io.StringIO()
        return

    def teardown_method(self):
        """Clean up the unit test environment after each method."""

        del self.stdout, self.stderr
        return

    def run(self, *argv):
        """Dispatch a command line with captured streams.

        Parameters
        ----------
        *argv : str
            Command-line arguments

        Returns
        -------
        int
            Exit code

        """

        return cli.cli_dispatch(list(argv), stdout=self.stdout,
                                stderr=self.stderr)

    def write_path(self, tmp_path, name='p4.dimacs'):
        """Write P4 in DIMACS format and return its file name."""

        path = os.path.join(tmp_path, name)
        with open(path, 'w') as fout:
            fout.write('c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n')
        return path

    def test_alpha(self, tmp_path):
        """Test the alpha subcommand on P4."""

        assert self.run('alpha', self.write_path(tmp_path)) == cli.EXIT_OK
        assert self.stdout.getvalue() == \
            'alpha=2 witness=0 2 method=enumeration\n'
        assert self.stderr.getvalue() == ''
        return

    def test_alpha_branch_and_bound(self, tmp_path):
        """Test forcing branch and bound with a low cutoff."""

        assert self.run('alpha', self.write_path(tmp_path),
                        '--enumeration-cutoff', '2') == cli.EXIT_OK
        assert self.stdout.getvalue().endswith('method=branch_and_bound\n')
        return

    def test_bounds_from_counts(self):
        """Test the bounds subcommand for n=4, m=6."""

        assert self.run('bounds', '--n', '4', '--m', '6') == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert len(lines) == 3
        assert lines[0] == 'kind=harant status=real value=1.0 ceil=1 disc=225'
        assert lines[1].startswith('kind=claimed status=real value=1.21922')
        assert lines[1].endswith('ceil=2 disc=68')
        assert lines[2] == ' '.join(('kind=repaired status=real value=1.0',
                                     'ceil=1 disc=196 origin=derived'))
        return

    def test_bounds_not_real(self, tmp_path):
        """Test the claimed bound on a tree read from a file."""

        assert self.run('bounds', self.write_path(tmp_path)) == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert lines[1] == 'kind=claimed status=not_real value=- ceil=- ' \
            'disc=-112'
        return

    def test_bounds_disconnected_counts(self):
        """Test that impossible counts are input errors."""

        assert self.run('bounds', '--n', '5', '--m', '2') == cli.EXIT_INPUT
        assert self.stderr.getvalue().startswith('alphaMIN: error: ')
        return

    def test_run_min(self, tmp_path):
        """Test the trace printed for P4."""

        assert self.run('run-min', self.write_path(tmp_path)) == cli.EXIT_OK
        assert self.stdout.getvalue() == '\n'.join([
            'j,vertex,degree,deleted,edges_removed', '1,0,1,0 1,2',
            '2,2,1,2 3,1', ''])
        return

    def test_random_policy_repeats(self, tmp_path):
        """Test that a seeded random run prints the same trace twice."""

        path = self.write_path(tmp_path)
        self.run('run-min', path, '--policy', 'random', '--seed', '9')
        first = self.stdout.getvalue()
        self.stdout = io.StringIO()
        self.run('run-min', path, '--policy', 'random', '--seed', '9')
        assert self.stdout.getvalue() == first
        return

    def test_exhaustive_policy(self, tmp_path):
        """Test that the exhaustive rule runs the k_MIN witness."""

        path = os.path.join(tmp_path, 'star.txt')
        with open(path, 'w') as fout:
            fout.write('0 1\n0 2\n0 3\n0 4\n')

        assert self.run('verify-chain', path, '--policy',
                        'exhaustive') == cli.EXIT_OK
        assert self.stdout.getvalue().splitlines()[0] == \
            'n=5 m=4 k=4 alpha=4 X=1 2 3 4 policy=exhaustive'

        self.stdout = io.StringIO()
        assert self.run('run-min', path, '--policy',
                        'exhaustive') == cli.EXIT_OK
        assert len(self.stdout.getvalue().splitlines()) == 1 + 4
        return

    def test_exhaustive_policy_budget(self, tmp_path):
        """Test that graphs over the k_MIN budget are input errors."""

        path = os.path.join(tmp_path, 'p15.dimacs')
        assert self.run('gen', '--family', 'path', '--n', '15', '--out',
                        path) == cli.EXIT_OK
        assert self.run('run-min', path, '--policy',
                        'exhaustive') == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('vertex budget') >= 0
        return

    def test_huge_vertex_id(self, tmp_path):
        """Test that an overflowing vertex id is an input error."""

        path = os.path.join(tmp_path, 'huge.txt')
        with open(path, 'w') as fout:
            fout.write('0 99999999999999999999999\n')

        assert self.run('parse', path) == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('line 1') >= 0
        return

    def test_gen_and_parse(self, tmp_path):
        """Test generating, validating, and converting a graph."""

        path = os.path.join(tmp_path, 'c5.dimacs')
        assert self.run('gen', '--family', 'cycle', '--n', '5', '--out',
                        path) == cli.EXIT_OK
        assert self.run('parse', path) == cli.EXIT_OK
        assert self.stdout.getvalue() == 'n=5 m=5 format=dimacs\n'

        self.stdout = io.StringIO()
        assert self.run('parse', path, '--to', 'edgelist') == cli.EXIT_OK
        assert self.stdout.getvalue() == \
            '# generated by alphaMIN gen\nn 5\n0 1\n0 4\n1 2\n2 3\n3 4\n'
        return

    def test_gen_gnm_stdout(self):
        """Test a seeded G(n, m) graph written to standard output."""

        assert self.run('gen', '--family', 'gnm', '--n', '8', '--m', '10',
                        '--seed', '3') == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert 'p edge 8 10' in lines
        assert len([line for line in lines if line.startswith('e ')]) == 10
        return

    def test_parse_warning(self, tmp_path):
        """Test that header mismatches are reported as warnings."""

        path = os.path.join(tmp_path, 'bad.dimacs')
        with open(path, 'w') as fout:
            fout.write('p edge 3 5\ne 1 2\ne 2 3\n')

        assert self.run('parse', path) == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert lines[0] == 'n=3 m=2 format=dimacs'
        assert lines[1].startswith('warning: header declares 5 edges')
        return

    def test_verify_chain(self, tmp_path):
        """Test the link report for P4 with an explicit set."""

        assert self.run('verify-chain', self.write_path(tmp_path), '--x',
                        '0', '2') == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert lines[0] == 'n=4 m=3 k=2 alpha=2 X=0 2 policy=lowest_index'
        assert 'inequality2_link violated -4' in lines
        return

    def test_verify_chain_not_maximum(self, tmp_path):
        """Test that a non-maximum set is an input error."""

        assert self.run('verify-chain', self.write_path(tmp_path), '--x',
                        '0') == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('has size 1') >= 0
        return

    def test_verify_chain_all_sets(self, tmp_path):
        """Test the all-sets summary for P4."""

        assert self.run('verify-chain', self.write_path(tmp_path),
                        '--all-x') == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert lines[0] == 'maximum_sets=3'
        assert 'harant_link holds_for_all holds=3 violated=0 ' \
            'not_applicable=0' in lines
        return

    def test_campaign_flags(self):
        """Test a campaign built from flags and written to stdout."""

        assert self.run('campaign', '--family', 'complete', '--n', '3',
                        '4') == cli.EXIT_OK
        lines = self.stdout.getvalue().splitlines()
        assert lines[0] == ','.join(campaign.csv_columns)
        assert len(lines) == 3
        return

    def test_campaign_file(self, tmp_path):
        """Test a campaign loaded from TOML with the CSV sent to a file."""

        spec_path = os.path.join(tmp_path, 'camp.toml')
        out_path = os.path.join(tmp_path, 'out.csv')
        with open(spec_path, 'w') as fout:
            fout.write('family = "gnm"\nn = [10]\nm = [15]\ninstances = 5\n'
                       'seed = 4\n')

        assert self.run('campaign', '--spec', spec_path, '--out',
                        out_path) == cli.EXIT_OK
        assert self.stdout.getvalue().find('gnm n=10 m=15') >= 0
        with open(out_path, 'r') as fin:
            assert len(fin.read().splitlines()) == 6
        return

    def test_missing_campaign_file(self, tmp_path):
        """Test that a missing campaign file is an input error."""

        path = os.path.join(tmp_path, 'missing.toml')
        assert self.run('campaign', '--spec', path) == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('missing.toml') >= 0
        return

    def test_bad_campaign_key(self, tmp_path):
        """Test that unknown campaign keys are input errors."""

        path = os.path.join(tmp_path, 'camp.toml')
        with open(path, 'w') as fout:
            fout.write('family = "path"\nn = [4]\ncolour = "red"\n')

        assert self.run('campaign', '--spec', path) == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('unknown campaign keys') >= 0
        return

    def test_missing_graph_file(self, tmp_path):
        """Test that a missing graph file is an input error."""

        path = os.path.join(tmp_path, 'none.dimacs')
        assert self.run('alpha', path) == cli.EXIT_INPUT
        assert self.stderr.getvalue().find('none.dimacs') >= 0
        return

    @pytest.mark.parametrize("argv", [
        [], ['nosuch'], ['bounds'], ['bounds', '--n', '4'],
        ['gen', '--family', 'gnm', '--n', '5'], ['campaign'],
        ['gen', '--family', 'complete_bipartite'],
        ['alpha', 'g.dimacs', '--format', 'xml']])
    def test_usage_errors(self, argv):
        """Test the exit code for malformed command lines.

        Parameters
        ----------
        argv : list
            Command-line arguments

        """

        assert self.run(*argv) == cli.EXIT_USAGE
        assert self.stderr.getvalue().startswith('usage error: ')
        return

    def test_help(self, capsys):
        """Test that --help succeeds."""

        assert self.run('--help') == cli.EXIT_OK
        assert capsys.readouterr().out.find('campaign') >= 0
        return

    def test_logger_level_restored(self):
        """Test that --verbose does not leak the INFO level."""

        level = pysat.logger.level
        self.run('--verbose', 'bounds', '--n', '4', '--m', '3')
        assert pysat.logger.level == level
        return

    def test_verbose_logs_cells(self, caplog):
        """Test that --verbose logs campaign progress."""

        with caplog.at_level(logging.INFO, logger='pysat'):
            self.run('--verbose', 'campaign', '--family', 'path', '--n', '4')

        assert caplog.text.find('campaign cell path n=4') >= 0
        return
