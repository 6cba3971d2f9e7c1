"""
Tests for configuration module.
"""

import logging
from pathlib import Path

import numpy as np
import pytest

from qbcap.config import (
    GridConfig,
    IntegratorConfig,
    LoggingConfig,
    ParallelConfig,
    QBCapConfig,
    RunConfig,
    get_config,
    set_config,
)
from qbcap.exceptions import ConfigurationError, ParameterError
from qbcap.logging_config import configure_logging, get_logger
from qbcap.model.hamiltonian import HamiltonianParams


class TestIntegratorConfig:
    """Test integrator configuration."""

    def test_default_values(self):
        """Test default integrator settings."""
        config = IntegratorConfig()
        assert config.method == "rk4"
        assert config.local_error_target == 1e-9
        assert config.max_error == 1e-6

    def test_invalid_method(self):
        """Test validation of the integration method."""
        with pytest.raises(ConfigurationError):
            IntegratorConfig(method="euler")

    def test_error_target_ordering(self):
        """Test that the local target may not exceed the hard limit."""
        with pytest.raises(ConfigurationError):
            IntegratorConfig(local_error_target=1e-5, max_error=1e-6)

    def test_non_positive_tolerance(self):
        """Test rejection of zero tolerances."""
        with pytest.raises(ValueError):
            IntegratorConfig(rtol=0.0)


class TestGridConfig:
    """Test verification grid configuration."""

    def test_default_axes(self):
        """Test default grid axes."""
        config = GridConfig()
        assert config.omega_b == (0.5, 1.0, 2.0)
        assert len(config.omega_c) * len(config.j1) * len(config.j2) == 36
        assert config.n_times == 200
        assert config.t_max == 50.0
        assert config.gammas == (0.0, 0.1, 0.25, 0.4, 0.5)

    def test_axes_become_float_tuples(self):
        """Test that list axes are normalised to float tuples."""
        config = GridConfig(omega_b=[1, 2])
        assert config.omega_b == (1.0, 2.0)

    def test_invalid_axes(self):
        """Test validation of grid axes."""
        with pytest.raises(ConfigurationError):
            GridConfig(omega_b=())

        with pytest.raises(ConfigurationError):
            GridConfig(omega_b=(0.0, 1.0))  # no battery gap

        with pytest.raises(ConfigurationError):
            GridConfig(gammas=(1.5,))

        with pytest.raises(ConfigurationError):
            GridConfig(n_times=1)


class TestParallelConfig:
    """Test parallel processing configuration."""

    def test_default_values(self):
        """Test default parallel settings."""
        config = ParallelConfig()
        assert config.n_jobs == -1
        assert config.backend == "loky"

    def test_invalid_values(self):
        """Test validation of parallel settings."""
        with pytest.raises(ConfigurationError):
            ParallelConfig(n_jobs=0)

        with pytest.raises(ConfigurationError):
            ParallelConfig(backend="dask")


class TestLoggingConfig:
    """Test logging configuration."""

    def test_level_is_uppercased(self):
        """Test case-insensitive log levels."""
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_invalid_level(self):
        """Test rejection of unknown levels."""
        with pytest.raises(ConfigurationError):
            LoggingConfig(level="VERBOSE")

    def test_file_requires_path(self):
        """Test that file logging needs a path."""
        with pytest.raises(ConfigurationError):
            LoggingConfig(log_to_file=True)

    def test_configure_logging(self, tmp_path):
        """Test level override and the rotating log file."""
        log_file = tmp_path / "logs" / "qbcap.log"
        config = LoggingConfig(level="ERROR", log_to_file=True, log_file=log_file)
        logger = configure_logging(config, level="INFO")
        try:
            assert logger.name == "qbcap"
            assert logger.level == logging.INFO
            assert len(logger.handlers) == 2

            get_logger("qbcap.relations").info("grid ready")
            for handler in logger.handlers:
                handler.flush()
            assert "qbcap.relations - INFO - grid ready" in log_file.read_text()
        finally:
            for handler in logger.handlers:
                handler.close()
            logger.handlers.clear()


class TestRunConfig:
    """Test command-line run configuration."""

    def test_default_run(self):
        """Test the default resonant weak-coupling run."""
        run = RunConfig()
        assert run.params.as_tuple() == (1.0, 1.0, 0.1, 0.1)
        assert run.steps == 1000
        assert run.gamma is None

    def test_times(self):
        """Test uniform sampling including both end points."""
        times = RunConfig(t_max=50.0, steps=1000).times()
        assert times.size == 1000
        assert times[0] == 0.0
        assert times[-1] == 50.0
        np.testing.assert_allclose(np.diff(times), 50.0 / 999)

    def test_invalid_run(self):
        """Test validation of run parameters."""
        with pytest.raises(ConfigurationError):
            RunConfig(steps=1)

        with pytest.raises(ConfigurationError):
            RunConfig(t_max=0.0)

        with pytest.raises(ConfigurationError):
            RunConfig(t_max=float("nan"))

        with pytest.raises(ConfigurationError):
            RunConfig(gamma=-0.1)

    def test_zero_battery_field(self):
        """Test that a run needs a positive battery gap."""
        with pytest.raises(ParameterError):
            RunConfig(params=HamiltonianParams(0.0, 1.0, 0.1, 0.1))


class TestQBCapConfig:
    """Test main configuration."""

    def test_default_config(self):
        """Test default configuration creation."""
        config = QBCapConfig()
        assert config.integrator is not None
        assert config.grid is not None
        assert config.parallel is not None
        assert config.random_seed == 42

    def test_to_dict(self):
        """Test conversion to dictionary."""
        config_dict = QBCapConfig().to_dict()
        assert set(config_dict) == {"integrator", "grid", "parallel", "logging", "random_seed"}
        assert isinstance(config_dict["grid"]["omega_b"], list)

    def test_from_dict(self):
        """Test creation from dictionary."""
        config = QBCapConfig.from_dict(
            {
                "integrator": {"method": "dopri"},
                "grid": {"omega_b": [1.0], "n_times": 20},
                "random_seed": 7,
            }
        )
        assert config.integrator.method == "dopri"
        assert config.grid.omega_b == (1.0,)
        assert config.grid.n_times == 20
        assert config.random_seed == 7

    def test_unknown_key(self):
        """Test rejection of unknown configuration keys."""
        with pytest.raises(ConfigurationError):
            QBCapConfig.from_dict({"grid": {"omega_d": [1.0]}})

    def test_yaml_round_trip(self, tmp_path: Path):
        """Test saving and loading YAML configuration."""
        pytest.importorskip("yaml")

        config = QBCapConfig()
        config.grid = GridConfig(omega_b=(1.0,), n_times=30)
        config.integrator.method = "dopri"
        path = tmp_path / "config.yaml"
        config.save_to_yaml(path)

        loaded = QBCapConfig.load_from_yaml(path)
        assert loaded.grid.omega_b == (1.0,)
        assert loaded.grid.n_times == 30
        assert loaded.integrator.method == "dopri"

    def test_global_config(self):
        """Test global configuration getter/setter."""
        original = get_config()
        try:
            new_config = QBCapConfig(random_seed=123)
            set_config(new_config)
            assert get_config().random_seed == 123
        finally:
            set_config(original)

    def test_env_overrides(self, monkeypatch):
        """Test QBCAP_N_JOBS and QBCAP_LOG_LEVEL overrides."""
        monkeypatch.setenv("QBCAP_N_JOBS", "1")
        monkeypatch.setenv("QBCAP_LOG_LEVEL", "debug")
        config = QBCapConfig(parallel=ParallelConfig(backend="threading"))
        assert config.parallel.n_jobs == 1
        assert config.parallel.backend == "threading"
        assert config.logging.level == "DEBUG"

    def test_invalid_env_override(self, monkeypatch):
        """Test that overrides are validated like file settings."""
        monkeypatch.setenv("QBCAP_N_JOBS", "0")
        with pytest.raises(ConfigurationError):
            QBCapConfig()
