#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Unit tests for campaign specs, rows, and summaries."""

import logging
import os

import pandas as pds
import pytest

import pysat

from alphaMIN import errors
from alphaMIN.campaigns import campaign
from alphaMIN.graphs import generators
from alphaMIN.methods import min_greedy


class TestCampaignSpec(object):
    """Unit tests for `alphaMIN.campaigns.campaign.CampaignSpec`."""

    def setup_method(self):
        """Set up the unit test environment for each method."""

        self.params = {'family': 'gnm', 'n': [10, 12], 'm': [15],
                       'instances': 3, 'seed': 7, 'policy': 'random'}
        return

    def teardown_method(self):
        """Clean up the unit test environment after each method."""

        del self.params
        return

    def test_dict_round_trip(self):
        """Test that to_dict and from_dict reproduce the spec."""

        spec = campaign.CampaignSpec.from_dict(self.params)
        assert spec.n == (10, 12)
        assert campaign.CampaignSpec.from_dict(spec.to_dict()) == spec
        return

    def test_scalar_grid(self):
        """Test that scalar grid values are wrapped."""

        spec = campaign.CampaignSpec('path', n=5)
        assert spec.n == (5, )
        return

    def test_from_file(self, tmp_path):
        """Test loading a TOML campaign file."""

        path = os.path.join(tmp_path, 'camp.toml')
        with open(path, 'w') as fout:
            fout.write('\n'.join(['family = "gnm"', 'n = [10, 12]',
                                  'm = [15]', 'instances = 3', 'seed = 7',
                                  'policy = "random"', '']))

        spec = campaign.CampaignSpec.from_file(path)
        assert spec == campaign.CampaignSpec.from_dict(self.params)
        return

    @pytest.mark.parametrize("update,msg", [
        ({'colour': 'red'}, 'unknown campaign keys: colour'),
        ({'family': 'wheel'}, 'unknown campaign family'),
        ({'policy': 'highest'}, 'unknown campaign policy'),
        ({'n': [0]}, 'positive vertex counts'),
        ({'m': []}, 'needs `m` or `density`'),
        ({'family': 'gnp'}, 'needs `p`'),
        ({'family': 'exhaustive', 'n': [8]}, 'need n <= 7'),
        ({'instances': 0}, 'at least 1')])
    def test_bad_params(self, update, msg):
        """Test the errors raised for invalid campaign settings.

        Parameters
        ----------
        update : dict
            Settings changed from the valid defaults
        msg : str
            Expected message fragment

        """

        self.params.update(update)
        pysat.utils.testing.eval_bad_input(
            campaign.CampaignSpec.from_dict, errors.BadParamsError, msg,
            input_args=[self.params])
        return


class TestRunCampaign(object):
    """Unit tests for `alphaMIN.campaigns.campaign.run_campaign`."""

    def test_header(self):
        """Test the fixed CSV header."""

        result = campaign.run_campaign(campaign.CampaignSpec('path', n=[4]))
        assert result.csv_text.splitlines()[0] == ','.join([
            'id', 'n', 'm', 'seed', 'alpha', 'k_run', 'k_min', 'k_min_exact',
            'harant', 'harant_status', 'claimed', 'claimed_status',
            'repaired', 'repaired_status', 'edge_sum', 'ineq2', 'ineq2_corr',
            'ineq1', 'claimed_valid', 'repaired_valid', 'harant_valid'])
        return

    def test_complete_row(self):
        """Test every value of the K4 row."""

        result = campaign.run_campaign(campaign.CampaignSpec('complete',
                                                             n=[4]))
        row = result.rows[0]
        assert row['n'] == '4'
        assert row['m'] == '6'
        assert row['alpha'] == '1'
        assert row['k_run'] == '1'
        assert row['k_min'] == '1'
        assert row['k_min_exact'] == 'true'
        assert row['harant'] == '1.000000'
        assert row['claimed'] == '1.219224'
        assert row['claimed_status'] == 'real'
        assert row['claimed_valid'] == 'violated'
        assert row['repaired_valid'] == 'holds'
        assert row['harant_valid'] == 'holds'
        assert row['ineq2'] == 'violated'
        assert row.gaps == {'harant': 0, 'claimed': -1, 'repaired': 0}
        return

    def test_identical_runs(self):
        """Test that rerunning a spec gives byte-identical CSV."""

        spec = campaign.CampaignSpec('gnm', n=[10], m=[15], instances=10,
                                     seed=11, policy='random')
        first = campaign.run_campaign(spec)
        second = campaign.run_campaign(spec)
        assert first.csv_text.encode() == second.csv_text.encode()
        assert first.summary_text == second.summary_text
        return

    def test_instance_seeds(self):
        """Test that instance seeds derive from the campaign seed."""

        spec = campaign.CampaignSpec('gnm', n=[8], m=[10], instances=4,
                                     seed=5)
        result = campaign.run_campaign(spec)
        assert [row['id'] for row in result.rows] == ['0', '1', '2', '3']
        assert [int(row['seed']) for row in result.rows] == \
            [generators.derive_seed(5, i) for i in range(4)]
        return

    def test_density_grid(self):
        """Test that densities become clipped edge counts."""

        spec = campaign.CampaignSpec('gnm', n=[6], density=[0.1, 1.5, 9.0])
        result = campaign.run_campaign(spec)
        assert [row['m'] for row in result.rows] == ['5', '9', '15']
        return

    def test_harant_never_violated(self):
        """Test Harant's bound on 100 G(10, 15) instances."""

        spec = campaign.CampaignSpec('gnm', n=[10], m=[15], instances=100,
                                     seed=1)
        result = campaign.run_campaign(spec)
        assert len(result.rows) == 100
        assert all(row['harant_valid'] == 'holds' for row in result.rows)
        assert all(int(row['k_run']) <= int(row['alpha'])
                   for row in result.rows)
        return

    def test_exhaustive_small(self):
        """Test the exhaustive campaign up to four vertices."""

        spec = campaign.CampaignSpec('exhaustive', n=[1, 2, 3, 4])
        result = campaign.run_campaign(spec)
        assert len(result.rows) == 1 + 1 + 4 + 38

        for row in result.rows:
            if int(row['m']) == int(row['n']) - 1:
                assert row['claimed_status'] == 'not_real'
                assert row['claimed_valid'] == 'not_applicable'

        k4_rows = [row for row in result.rows
                   if row['n'] == '4' and row['m'] == '6']
        assert len(k4_rows) == 1
        assert k4_rows[0]['claimed_valid'] == 'violated'
        return

    @pytest.mark.exhaustive
    def test_exhaustive_six(self):
        """Test the claimed-bound map on every graph up to six vertices."""

        spec = campaign.CampaignSpec('exhaustive', n=[1, 2, 3, 4, 5, 6])
        result = campaign.run_campaign(spec)
        frame = campaign.rows_to_frame(result.rows)

        trees = frame[frame['m'].astype(int) == frame['n'].astype(int) - 1]
        assert (trees['claimed_status'] == 'not_real').all()
        assert (frame['claimed_valid'] == 'violated').any()
        assert (frame['harant_valid'] == 'holds').all()
        assert (frame['repaired_valid'] == 'holds').all()

        # Inequality (1) tally for the lowest-index runs
        assert len(frame) == 27476
        assert (frame['ineq1'] == 'holds').sum() == 27476
        assert (frame['ineq1'] == 'violated').sum() == 0
        summary = campaign.summarize(result.rows)
        assert summary['viol_ineq1'].sum() == 0
        return

    def test_alpha_budget(self, caplog):
        """Test rows whose alpha is over budget."""

        spec = campaign.CampaignSpec('path', n=[6], alpha_budget=4)
        with caplog.at_level(logging.WARNING, logger='pysat'):
            result = campaign.run_campaign(spec)

        row = result.rows[0]
        assert row['alpha'] == ''
        assert row['k_run'] == '3'
        assert row['edge_sum'] == ''
        assert row['harant_valid'] == ''
        assert row['ineq1'] == 'holds'
        assert row['harant'] != ''
        assert caplog.text.find('alpha is unknown') >= 0
        return

    def test_kmin_estimate(self):
        """Test that large graphs fall back to the k_MIN estimate."""

        spec = campaign.CampaignSpec('cycle', n=[16], kmin_budget=10)
        row = campaign.run_campaign(spec).rows[0]
        assert row['k_min_exact'] == 'false'
        assert int(row['k_min']) >= 1
        return

    def test_exhaustive_policy(self):
        """Test that the exhaustive policy runs the k_MIN witness."""

        spec = campaign.CampaignSpec('star', n=[5], policy='exhaustive')
        row = campaign.run_campaign(spec).rows[0]
        assert row['k_run'] == row['k_min'] == '4'
        return

    def test_k_min_searched_once(self, monkeypatch):
        """Test that each instance runs the k_MIN search only once."""

        calls = list()
        search = min_greedy.k_min_exhaustive

        def counted(graph, vertex_budget):
            calls.append(graph.n)
            return search(graph, vertex_budget)

        monkeypatch.setattr(min_greedy, 'k_min_exhaustive', counted)
        spec = campaign.CampaignSpec('cycle', n=[5, 6, 7],
                                     policy='exhaustive')
        rows = campaign.run_campaign(spec).rows

        assert calls == [5, 6, 7]
        assert [row['k_run'] for row in rows] == \
            [row['k_min'] for row in rows]
        return

    def test_gnp_skips_failed_instances(self, caplog):
        """Test that unconnected G(n, p) instances are skipped and logged."""

        spec = campaign.CampaignSpec('gnp', n=[6], p=[0.0], instances=2,
                                     max_retries=2)
        with caplog.at_level(logging.WARNING, logger='pysat'):
            result = campaign.run_campaign(spec)

        assert len(result.rows) == 0
        assert result.summary_text == 'no instances\n'
        assert caplog.text.find('skipping instance 1') >= 0
        return

    def test_write_campaign(self, tmp_path):
        """Test the CSV written to disk."""

        result = campaign.run_campaign(campaign.CampaignSpec('cycle',
                                                             n=[5, 6]))
        path = os.path.join(tmp_path, 'out.csv')
        campaign.write_campaign(result, path)

        with open(path, 'rb') as fin:
            assert fin.read() == result.csv_text.encode('utf-8')
        frame = pds.read_csv(path)
        assert frame['n'].tolist() == [5, 6]
        assert list(frame.columns) == campaign.csv_columns
        return


class TestSummary(object):
    """Unit tests for the per-cell summary."""

    def test_counts_per_cell(self):
        """Test violation and not_real counts for named families."""

        spec = campaign.CampaignSpec('complete', n=[3, 4])
        summary = campaign.summarize(campaign.run_campaign(spec).rows)
        assert list(summary.index) == ['complete n=3', 'complete n=4']
        assert summary.loc['complete n=4', 'instances'] == 1
        assert summary.loc['complete n=4', 'viol_claimed_valid'] == 1
        assert summary.loc['complete n=4', 'viol_ineq2'] == 1
        assert summary.loc['complete n=4', 'gap_claimed'] == -1.0
        assert summary.loc['complete n=3', 'not_real_claimed'] == 1
        return

    def test_summary_text(self):
        """Test that the text table lists every cell."""

        spec = campaign.CampaignSpec('gnm', n=[8], m=[8, 12], instances=3,
                                     seed=2)
        text = campaign.run_campaign(spec).summary_text
        assert text.find('gnm n=8 m=8') >= 0
        assert text.find('gnm n=8 m=12') >= 0
        return
