"""
Tests for resource time series.
"""

import numpy as np
import pytest

import qbcap.series
from qbcap.capacity import capacity_report
from qbcap.noise import noisy_resources
from qbcap.series import SERIES_COLUMNS, resource_series


class TestResourceSeries:
    """Test the per-time resource table."""

    def test_columns(self, resonant_params):
        """Test column order and the extra coherence column."""
        frame = resource_series(resonant_params, np.linspace(0.0, 10.0, 11))
        assert list(frame.columns) == SERIES_COLUMNS + ["re_alpha_beta"]
        assert len(frame) == 11

    def test_matches_capacity_report(self, param_samples):
        """Test the tabulated capacities against capacity_report."""
        times = np.linspace(0.0, 50.0, 26)
        for params in param_samples:
            frame = resource_series(params, times)
            for t, row in zip(times, frame.to_dict("records")):
                report = capacity_report(params, t)
                assert row["capacity_b"] == pytest.approx(report.battery, abs=1e-12)
                assert row["capacity_c"] == pytest.approx(report.charger, abs=1e-12)
                assert row["capacity_total"] == pytest.approx(report.total, abs=1e-12)

    def test_dephased_rows(self, detuned_params):
        """Test that dephased rows carry noisy_resources values."""
        times = np.linspace(0.0, 20.0, 9)
        frame = resource_series(detuned_params, times, 0.25)
        for t, row in zip(times, frame.to_dict("records")):
            report = noisy_resources(detuned_params, t, 0.25)
            assert row["concurrence"] == report.concurrence
            assert row["coherence"] == report.coherence_l1
            assert row["texture"] == report.texture_tr

    @pytest.mark.parametrize("gamma", [None, 0.1])
    def test_hamiltonians_diagonalized_once(self, resonant_params, monkeypatch, gamma):
        """Test that the three Hamiltonians are diagonalized once per call, not per row."""
        calls = []
        original = qbcap.series.eig_hermitian

        def counting(m, *args, **kwargs):
            calls.append(np.shape(m))
            return original(m, *args, **kwargs)

        monkeypatch.setattr(qbcap.series, "eig_hermitian", counting)
        resource_series(resonant_params, np.linspace(0.0, 50.0, 200), gamma)
        assert sorted(calls) == [(2, 2), (2, 2), (4, 4)]
