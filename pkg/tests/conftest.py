"""
Test Configuration and Fixtures

Common pytest fixtures and configuration for all tests.
"""

import numpy as np
import pytest

from qbcap.config import GridConfig, QBCapConfig
from qbcap.model.hamiltonian import HamiltonianParams
from qbcap.relations.grid import ParameterGrid


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def resonant_params():
    """Weak-coupling resonant model: ω_b = ω_c = 1, J₁ = J₂ = 0.1."""
    return HamiltonianParams(omega_b=1.0, omega_c=1.0, j1=0.1, j2=0.1)


@pytest.fixture
def detuned_params():
    """Strong-coupling detuned model: ω_b = J₁ = J₂ = 1, ω_c = 1.2."""
    return HamiltonianParams(omega_b=1.0, omega_c=1.2, j1=1.0, j2=1.0)


@pytest.fixture
def param_samples():
    """Parameter points spanning resonance, detuning and both coupling regimes."""
    return [
        HamiltonianParams(1.0, 1.0, 0.1, 0.1),
        HamiltonianParams(1.0, 1.2, 1.0, 1.0),
        HamiltonianParams(0.5, 2.0, 0.5, 0.0),
        HamiltonianParams(2.0, 0.5, 1.0, 0.1),
        HamiltonianParams(1.0, 1.0, 0.0, 1.0),
    ]


@pytest.fixture
def small_grid_config():
    """Reduced verification grid."""
    return GridConfig(
        omega_b=(1.0, 2.0),
        omega_c=(1.0, 1.2),
        j1=(0.5,),
        j2=(0.1,),
        t_max=20.0,
        n_times=30,
        gammas=(0.0, 0.25, 0.5),
        n_x_states=200,
    )


@pytest.fixture
def small_grid(small_grid_config):
    """Reduced verification grid with a fixed seed."""
    return ParameterGrid(seed=7, axes=small_grid_config)


@pytest.fixture
def small_config(small_grid_config):
    """Configuration carrying the reduced grid."""
    return QBCapConfig(grid=small_grid_config)
