"""Dense linear algebra for qubit and two-qubit operators."""

from qbcap.linalg.operators import (
    HERMITIAN_TOL,
    PSD_TOL,
    PURITY_TOL,
    SQRT_CLAMP,
    DensityOperator,
    Spectrum,
    Subsystem,
    apply_kraus,
    as_matrix,
    clamped_sqrt,
    eig_hermitian,
    partial_trace,
    spectral_exponential,
    trace_distance,
    trace_norm,
)
from qbcap.linalg.paulis import (
    IDENTITY,
    PAULIS,
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ket,
    two_qubit,
)
from qbcap.linalg.sampling import random_density_matrix, random_hermitian, random_unitaries

__all__ = [
    "DensityOperator",
    "Spectrum",
    "Subsystem",
    "eig_hermitian",
    "partial_trace",
    "trace_norm",
    "trace_distance",
    "apply_kraus",
    "spectral_exponential",
    "as_matrix",
    "clamped_sqrt",
    "HERMITIAN_TOL",
    "PSD_TOL",
    "PURITY_TOL",
    "SQRT_CLAMP",
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
    "PAULIS",
    "ket",
    "two_qubit",
    "random_density_matrix",
    "random_hermitian",
    "random_unitaries",
]
