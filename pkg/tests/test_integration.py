"""
Integration tests for complete workflows.
"""

import numpy as np
import pandas as pd
import pytest

from qbcap import BatteryAnalysisPipeline, ParameterGrid, RunConfig, verify_all
from qbcap.config import ParallelConfig, QBCapConfig, get_config, set_config
from qbcap.dynamics import integrate
from qbcap.linalg import DensityOperator, ket, spectral_exponential, trace_distance
from qbcap.model import HamiltonianParams, build_total_hamiltonian, evolved_density
from qbcap.relations import GridEvaluation
from qbcap.series import SERIES_COLUMNS
from qbcap.utils import ParallelProcessor, parallel_map
from qbcap.verdicts import RelationId


class TestOracleEquivalence:
    """Test closed form, spectral exponential and RK4 against each other."""

    @pytest.mark.parametrize(
        "params",
        [
            HamiltonianParams(0.5, 2.0, 1.0, 1.0),
            HamiltonianParams(1.0, 1.2, 0.1, 0.0),
            HamiltonianParams(2.0, 0.5, 0.5, 0.1),
            HamiltonianParams(1.0, 1.0, 1.0, 1.0),
        ],
    )
    def test_three_oracles(self, params):
        """Test pairwise trace distance ≤ 1e-6 at every sample."""
        trajectory = integrate(params, 50.0, 1000)
        h = build_total_hamiltonian(params)
        for t, state in zip(trajectory.times[::25], trajectory.states[::25]):
            closed = evolved_density(params, t)
            psi = spectral_exponential(h, t) @ ket("01")
            spectral = DensityOperator.from_pure(psi)
            assert trace_distance(closed, spectral) <= 1e-6
            assert trace_distance(closed, state) <= 1e-6
            assert trace_distance(spectral, state) <= 1e-6

    @pytest.mark.slow
    @pytest.mark.integration
    def test_default_grid(self):
        """Test all three oracles at every point and time of the default grid."""
        grid = ParameterGrid.default(seed=42)
        times = grid.times()
        worst = 0.0
        for params in grid.params():
            trajectory = integrate(params, float(times[-1]), len(times))
            np.testing.assert_allclose(trajectory.times, times, rtol=0, atol=1e-12)
            h = build_total_hamiltonian(params)
            for t, state in zip(times, trajectory.states):
                closed = evolved_density(params, t)
                spectral = DensityOperator.from_pure(spectral_exponential(h, t) @ ket("01"))
                worst = max(
                    worst,
                    trace_distance(closed, spectral),
                    trace_distance(closed, state),
                    trace_distance(spectral, state),
                )
        assert worst <= 1e-6


class TestPipeline:
    """Test the analysis pipeline."""

    def test_evolve(self):
        """Test the exported trajectory columns."""
        frame = BatteryAnalysisPipeline().evolve(RunConfig(steps=20))
        assert list(frame.columns) == SERIES_COLUMNS
        assert len(frame) == 20
        assert (frame["residual"] >= -1e-9).all()

    def test_table1(self):
        """Test the reference-table pass column."""
        table = BatteryAnalysisPipeline().table1()
        assert table["pass"].all()

    def test_sweep_detuning(self):
        """Test the detuning summary against the closed-form peak."""
        run = RunConfig(params=HamiltonianParams(1.0, 1.0, 1.0, 1.0), t_max=20.0, steps=400)
        series, summary = BatteryAnalysisPipeline().sweep_detuning([0.0, 0.2, 0.5], run)

        assert sorted(series) == [0.0, 0.2, 0.5]
        assert list(summary["omega_c"]) == pytest.approx([1.0, 1.2, 1.5])
        assert list(summary["reaches_ceiling"]) == [True, False, False]

        for row in summary.to_dict("records"):
            delta = row["delta"]
            expected = 2.0 * abs(1.0 - delta**2) / (1.0 + delta**2)
            assert row["peak_capacity"] == pytest.approx(expected, abs=1e-9)
            assert row["charging_max"] <= row["peak_capacity"] + 1e-9
            assert row["max_capacity"] == pytest.approx(2.0)

    def test_sweep_requires_deltas(self):
        """Test rejection of an empty sweep."""
        from qbcap.exceptions import ConfigurationError

        with pytest.raises(ConfigurationError):
            BatteryAnalysisPipeline().sweep_detuning([], RunConfig(steps=10))

    def test_noise_sweep(self):
        """Test the wide dephasing table."""
        frame = BatteryAnalysisPipeline().noise_sweep([0.0, 0.25], RunConfig(steps=30))
        assert frame.shape == (30, 1 + 2 * 7)
        np.testing.assert_allclose(
            frame["concurrence_g0.25"], 0.25 * frame["concurrence_g0"], atol=1e-12
        )

    def test_threaded_noise_sweep(self):
        """Test that joblib fan-out matches the serial result."""
        run = RunConfig(steps=30)
        serial_config = QBCapConfig(parallel=ParallelConfig(n_jobs=1))
        serial = BatteryAnalysisPipeline(serial_config).noise_sweep([0.0, 0.1, 0.4], run)
        config = QBCapConfig(parallel=ParallelConfig(n_jobs=2, backend="threading"))
        threaded = BatteryAnalysisPipeline(config).noise_sweep([0.0, 0.1, 0.4], run)
        pd.testing.assert_frame_equal(serial, threaded)

    def test_verify(self, small_config):
        """Test the verification entry point."""
        grid, verdicts = BatteryAnalysisPipeline(small_config).verify(
            seed=3, tol=1e-9, relations=["thm9_texture", "thm10_texture_residual"]
        )
        assert grid.seed == 3
        assert [v.relation for v in verdicts] == [
            RelationId.THM9_TEXTURE,
            RelationId.THM10_TEXTURE_RESIDUAL,
        ]
        assert all(v.passed for v in verdicts)


class TestParallel:
    """Test joblib helpers."""

    def test_parallel_map_order(self):
        """Test that results keep input order."""
        assert parallel_map(abs, [-3, 1, -2], n_jobs=2, backend="threading") == [3, 1, 2]

    def test_processor_from_config(self):
        """Test construction from ParallelConfig."""
        processor = ParallelProcessor.from_config(ParallelConfig(n_jobs=2, backend="threading"))
        assert processor.n_jobs == 2
        assert processor.map(abs, [-1, 2]) == [1, 2]

    def test_verify_fans_out_by_default(self, small_grid, monkeypatch):
        """Test that grid evaluation uses every core unless configured otherwise."""
        monkeypatch.delenv("QBCAP_N_JOBS", raising=False)
        original = get_config()
        try:
            set_config(QBCapConfig())
            evaluation = GridEvaluation(small_grid)
            assert evaluation.processor.n_jobs == -1
            assert evaluation.processor.backend == "loky"
        finally:
            set_config(original)

    def test_process_pool_matches_serial(self, small_grid):
        """Test that the loky fan-out pickles every job and gives identical verdicts."""
        relations = ["thm1_entanglement", "thm4_conservation", "appB_family"]
        serial = verify_all(small_grid, relations=relations, processor=ParallelProcessor(n_jobs=1))
        pooled = verify_all(
            small_grid, relations=relations, processor=ParallelProcessor(n_jobs=2, backend="loky")
        )
        assert serial == pooled


@pytest.mark.slow
@pytest.mark.integration
class TestDefaultGrid:
    """Test the full catalog on the default grid."""

    def test_all_relations_pass(self):
        """Test every relation on 108 parameter points × 200 times."""
        verdicts = verify_all(ParameterGrid.default(seed=42))
        assert len(verdicts) == 17
        failures = [v.name for v in verdicts if not v.passed]
        assert failures == []

    def test_thread_pool_matches_serial(self):
        """Test that the parallel evaluation gives identical verdicts."""
        grid = ParameterGrid.default(seed=42).restrict(lambda p: p.omega_b == 1.0)
        relations = ["thm1_entanglement", "thm2_subadditivity", "appB_family"]
        serial = verify_all(grid, relations=relations, processor=ParallelProcessor(n_jobs=1))
        threaded = verify_all(
            grid, relations=relations, processor=ParallelProcessor(n_jobs=2, backend="threading")
        )
        assert serial == threaded
