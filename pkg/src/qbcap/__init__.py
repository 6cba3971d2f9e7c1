"""
qbcap: Quantum Battery Capacity Laboratory

Two-qubit battery–charger model with exact and integrated dynamics, six
quantum-resource measures, the battery capacity and its subsystem split,
local dephasing, and a catalog of numerically verified relations between
capacity and resources.
"""

__version__ = "0.1.0"
__author__ = "qbcap Contributors"
__license__ = "MIT"

# Capacity
from qbcap.capacity import (
    CapacityReport,
    XState,
    active_passive,
    capacity_report,
    capacity_spectral,
    schur_convexity_check,
    subadditivity_check,
)

# Configuration and logging
from qbcap.config import QBCapConfig, RunConfig, get_config, set_config

# Dynamics
from qbcap.dynamics import Trajectory, battery_energy_series, integrate

# Exceptions
from qbcap.exceptions import (
    ConfigurationError,
    GammaAtHalfError,
    GammaOutOfRangeError,
    HermiticityDriftError,
    IntegrationError,
    LinearAlgebraError,
    NotPureError,
    QBCapError,
    StepTooCoarseError,
    UnknownRelationError,
)

# Linear algebra
from qbcap.linalg import DensityOperator, Spectrum, eig_hermitian, partial_trace, trace_norm
from qbcap.logging_config import configure_logging, get_logger, setup_logger

# Model
from qbcap.model import EvolvedState, HamiltonianParams, build_total_hamiltonian, evolve_closed_form

# Noise
from qbcap.noise import NoiseParams, dephasing_kraus, noisy_resources, noisy_state
from qbcap.pipeline import BatteryAnalysisPipeline

# Relations
from qbcap.relations import ParameterGrid, verify, verify_all

# Resources
from qbcap.resources import ResourceReport, majorizes, measure_all
from qbcap.series import resource_series
from qbcap.verdicts import RelationId, RelationVerdict

__all__ = [
    # Model and dynamics
    "HamiltonianParams",
    "EvolvedState",
    "build_total_hamiltonian",
    "evolve_closed_form",
    "Trajectory",
    "integrate",
    "battery_energy_series",
    # Linear algebra
    "DensityOperator",
    "Spectrum",
    "eig_hermitian",
    "partial_trace",
    "trace_norm",
    # Resources and capacity
    "ResourceReport",
    "measure_all",
    "majorizes",
    "CapacityReport",
    "XState",
    "capacity_spectral",
    "active_passive",
    "capacity_report",
    "subadditivity_check",
    "schur_convexity_check",
    # Noise
    "NoiseParams",
    "dephasing_kraus",
    "noisy_state",
    "noisy_resources",
    # Relations
    "RelationId",
    "RelationVerdict",
    "ParameterGrid",
    "verify",
    "verify_all",
    "resource_series",
    "BatteryAnalysisPipeline",
    # Configuration
    "QBCapConfig",
    "RunConfig",
    "get_config",
    "set_config",
    # Logging
    "setup_logger",
    "configure_logging",
    "get_logger",
    # Exceptions
    "QBCapError",
    "LinearAlgebraError",
    "NotPureError",
    "IntegrationError",
    "StepTooCoarseError",
    "HermiticityDriftError",
    "GammaOutOfRangeError",
    "GammaAtHalfError",
    "UnknownRelationError",
    "ConfigurationError",
]
