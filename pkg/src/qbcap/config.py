"""
Configuration Module for qbcap

Centralized configuration for integration, verification grids, parallel
fan-out, logging and command-line runs, with validation and defaults.
"""

import math
import os
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Dict, Optional, Tuple

import numpy as np

from qbcap.exceptions import ConfigurationError
from qbcap.model.hamiltonian import HamiltonianParams


@dataclass
class IntegratorConfig:
    """Von Neumann integrator configuration."""

    method: str = "rk4"  # or "dopri"
    local_error_target: float = 1e-9
    max_error: float = 1e-6
    max_substeps: int = 65536
    symmetrization_limit: float = 1e-9
    rtol: float = 1e-11  # dopri only
    atol: float = 1e-11  # dopri only

    def __post_init__(self):
        """Validate integrator parameters."""
        if self.method not in ["rk4", "dopri"]:
            raise ConfigurationError(f"Invalid integration method: {self.method}")

        for name in ["local_error_target", "max_error", "symmetrization_limit", "rtol", "atol"]:
            value = getattr(self, name)
            if not value > 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

        if self.local_error_target > self.max_error:
            raise ConfigurationError(
                f"local_error_target ({self.local_error_target}) must not exceed "
                f"max_error ({self.max_error})"
            )

        if self.max_substeps < 1:
            raise ConfigurationError(f"max_substeps must be >= 1, got {self.max_substeps}")


@dataclass
class GridConfig:
    """Default verification grid."""

    omega_b: Tuple[float, ...] = (0.5, 1.0, 2.0)
    omega_c: Tuple[float, ...] = (0.5, 1.0, 1.2, 2.0)
    j1: Tuple[float, ...] = (0.1, 0.5, 1.0)
    j2: Tuple[float, ...] = (0.0, 0.1, 1.0)
    t_max: float = 50.0
    n_times: int = 200
    gammas: Tuple[float, ...] = (0.0, 0.1, 0.25, 0.4, 0.5)
    n_x_states: int = 10_000

    def __post_init__(self):
        """Validate grid axes."""
        for name in ["omega_b", "omega_c", "j1", "j2", "gammas"]:
            values = tuple(float(v) for v in getattr(self, name))
            if not values:
                raise ConfigurationError(f"Grid axis '{name}' must not be empty")
            setattr(self, name, values)

        if any(w <= 0 for w in self.omega_b):
            raise ConfigurationError(f"Battery fields must be positive, got {self.omega_b}")

        if any(not 0 <= g <= 1 for g in self.gammas):
            raise ConfigurationError(f"Dephasing probabilities must be in [0, 1], got {self.gammas}")

        if self.t_max <= 0:
            raise ConfigurationError(f"t_max must be positive, got {self.t_max}")

        if self.n_times < 2:
            raise ConfigurationError(f"n_times must be >= 2, got {self.n_times}")

        if self.n_x_states < 0:
            raise ConfigurationError(f"n_x_states must be non-negative, got {self.n_x_states}")


@dataclass
class ParallelConfig:
    """Parallel processing configuration."""

    n_jobs: int = -1  # Use all available cores
    backend: str = "loky"
    verbose: int = 0
    prefer: str = "processes"  # or "threads"

    def __post_init__(self):
        """Validate parallel processing parameters."""
        if self.backend not in ["loky", "threading", "multiprocessing"]:
            raise ConfigurationError(f"Invalid backend: {self.backend}")

        if self.prefer not in ["threads", "processes"]:
            raise ConfigurationError(f"Invalid prefer: {self.prefer}")

        if self.n_jobs == 0:
            raise ConfigurationError("n_jobs must be non-zero")

        if self.verbose < 0:
            raise ConfigurationError(f"Verbose must be non-negative, got {self.verbose}")


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format: str = "%Y-%m-%d %H:%M:%S"
    log_to_file: bool = False
    log_file: Optional[Path] = None

    def __post_init__(self):
        """Validate logging parameters."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        self.level = self.level.upper()
        if self.level not in valid_levels:
            raise ConfigurationError(
                f"Invalid log level: {self.level}. Must be one of {valid_levels}"
            )

        if self.log_to_file and self.log_file is None:
            raise ConfigurationError("log_file must be specified when log_to_file is True")


@dataclass
class RunConfig:
    """
    One command-line run: model constants, time sampling and output target.

    The defaults are the resonant weak-coupling point ω_b = ω_c = 1,
    J₁ = J₂ = 0.1 sampled at 1000 points over [0, 50].

    Examples
    --------
    >>> run = RunConfig(steps=2)
    >>> run.times()
    array([ 0., 50.])
    """

    params: HamiltonianParams = field(
        default_factory=lambda: HamiltonianParams(omega_b=1.0, omega_c=1.0, j1=0.1, j2=0.1)
    )
    t_max: float = 50.0
    steps: int = 1000
    gamma: Optional[float] = None
    seed: int = 42
    output_path: Path = field(default_factory=lambda: Path("evolve.csv"))

    def __post_init__(self):
        """Validate run parameters."""
        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ConfigurationError(f"t_max must be positive, got {self.t_max}")

        if self.steps < 2:
            raise ConfigurationError(f"steps must be >= 2, got {self.steps}")

        if self.gamma is not None and not 0 <= self.gamma <= 1:
            raise ConfigurationError(f"gamma must be in [0, 1], got {self.gamma}")

        self.params.require_battery_gap()
        self.output_path = Path(self.output_path)

    def times(self) -> np.ndarray:
        """Uniform sample times, first sample at t = 0 and last at t_max."""
        return np.linspace(0.0, self.t_max, self.steps)


@dataclass
class QBCapConfig:
    """
    Main configuration class for qbcap.

    Examples
    --------
    >>> config = QBCapConfig()
    >>> config.integrator.method
    'rk4'
    >>> config.grid.n_times = 50
    >>> config.save_to_yaml('my_config.yaml')
    """

    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    parallel: ParallelConfig = field(default_factory=ParallelConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Reproducibility
    random_seed: int = 42

    def __post_init__(self):
        """Apply environment overrides."""
        self._apply_env_vars()

    def _apply_env_vars(self):
        """Apply environment variable overrides."""
        # Example: QBCAP_N_JOBS=1 for a serial run
        if env_jobs := os.getenv("QBCAP_N_JOBS"):
            self.parallel = replace(self.parallel, n_jobs=int(env_jobs))

        if env_log_level := os.getenv("QBCAP_LOG_LEVEL"):
            self.logging = replace(self.logging, level=env_log_level)

    def to_dict(self) -> Dict:
        """Convert configuration to dictionary."""
        grid = asdict(self.grid)
        for key, value in grid.items():
            if isinstance(value, tuple):
                grid[key] = list(value)  # YAML has no tuples

        logging_dict = asdict(self.logging)
        if logging_dict["log_file"] is not None:
            logging_dict["log_file"] = str(logging_dict["log_file"])

        return {
            "integrator": asdict(self.integrator),
            "grid": grid,
            "parallel": asdict(self.parallel),
            "logging": logging_dict,
            "random_seed": self.random_seed,
        }

    @classmethod
    def from_dict(cls, config_dict: Dict) -> "QBCapConfig":
        """Create configuration from dictionary."""
        grid_dict = dict(config_dict.get("grid", {}))
        for key, value in grid_dict.items():
            if isinstance(value, list):
                grid_dict[key] = tuple(value)

        logging_dict = dict(config_dict.get("logging", {}))
        if logging_dict.get("log_file") is not None:
            logging_dict["log_file"] = Path(logging_dict["log_file"])

        try:
            return cls(
                integrator=IntegratorConfig(**config_dict.get("integrator", {})),
                grid=GridConfig(**grid_dict),
                parallel=ParallelConfig(**config_dict.get("parallel", {})),
                logging=LoggingConfig(**logging_dict),
                random_seed=config_dict.get("random_seed", 42),
            )
        except TypeError as exc:
            raise ConfigurationError(f"Unknown configuration key: {exc}") from exc

    def save_to_yaml(self, filepath: Path):
        """Save configuration to YAML file."""
        try:
            import yaml
        except ImportError:
            raise ImportError("PyYAML required for saving config. Install with: pip install pyyaml")

        with open(filepath, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False)

    @classmethod
    def load_from_yaml(cls, filepath: Path) -> "QBCapConfig":
        """Load configuration from YAML file."""
        try:
            import yaml
        except ImportError:
            raise ImportError(
                "PyYAML required for loading config. Install with: pip install pyyaml"
            )

        with open(filepath, "r") as f:
            config_dict = yaml.safe_load(f) or {}

        return cls.from_dict(config_dict)


# Global default configuration instance
DEFAULT_CONFIG = QBCapConfig()


def get_config() -> QBCapConfig:
    """
    Get the default configuration instance.

    Returns
    -------
    QBCapConfig
        Default configuration object
    """
    return DEFAULT_CONFIG


def set_config(config: QBCapConfig):
    """
    Set the global default configuration.

    Parameters
    ----------
    config : QBCapConfig
        New configuration to set as default

    Examples
    --------
    >>> new_config = QBCapConfig()
    >>> new_config.integrator.method = "dopri"
    >>> set_config(new_config)
    """
    global DEFAULT_CONFIG
    DEFAULT_CONFIG = config
