"""
Dense Operators for Qubit and Two-Qubit Systems

Density operators, Hermitian spectra, partial traces, trace norms and
Kraus channels for dimension-2 and dimension-4 operators.
"""

from enum import Enum
from typing import NamedTuple, Sequence, Union

import numpy as np

from qbcap.exceptions import (
    DimensionMismatchError,
    InvalidDensityOperatorError,
    LinearAlgebraError,
    NonHermitianError,
    NotTracePreservingError,
)

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
PURITY_TOL = 1e-8
SQRT_CLAMP = 1e-10
KRAUS_TOL = 1e-10

MatrixLike = Union[np.ndarray, "DensityOperator", Sequence[Sequence[complex]]]


class Subsystem(str, Enum):
    """Which qubit of the |b c⟩ pair to keep."""

    BATTERY = "battery"
    CHARGER = "charger"


class Spectrum(NamedTuple):
    """Ascending eigenvalues with matching orthonormal eigenvectors (columns)."""

    values: np.ndarray
    vectors: np.ndarray


def as_matrix(m: MatrixLike) -> np.ndarray:
    """Return a square complex array, raising DimensionMismatchError otherwise."""
    if isinstance(m, DensityOperator):
        return m.matrix

    array = np.asarray(m, dtype=complex)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise DimensionMismatchError(f"Expected a non-empty square matrix, got shape {array.shape}")
    return array


def hermiticity_defect(m: np.ndarray) -> float:
    """max |M_ij − conj(M_ji)|."""
    return float(np.max(np.abs(m - m.conj().T)))


def clamped_sqrt(x, tol: float = SQRT_CLAMP):
    """
    Square root that absorbs roundoff below zero.

    Arguments in [−tol, 0) are treated as 0; anything more negative is an error.
    Works elementwise on arrays.
    """
    values = np.asarray(x, dtype=float)
    if np.any(values < -tol):
        raise LinearAlgebraError(
            f"Square-root argument {float(np.min(values)):.3e} is below the clamp tolerance {tol}"
        )
    root = np.sqrt(np.clip(values, 0.0, None))
    return float(root) if root.ndim == 0 else root


class DensityOperator:
    """
    Validated density operator: Hermitian, unit trace, positive semidefinite.

    The matrix is copied and frozen on construction, so instances are
    immutable and safe to share between threads.

    Parameters
    ----------
    matrix : array-like
        Square complex matrix
    atol : float
        Tolerance used for all three validity checks (default 1e-10)

    Examples
    --------
    >>> rho = DensityOperator(np.diag([0.3, 0.7]))
    >>> rho.dim
    2
    >>> rho.eigenvalues
    array([0.3, 0.7])
    """

    def __init__(self, matrix: MatrixLike, atol: float = PSD_TOL):
        m = np.array(as_matrix(matrix), dtype=complex, copy=True)

        defect = hermiticity_defect(m)
        if defect > atol:
            raise NonHermitianError(f"Density operator is not Hermitian (defect {defect:.3e})")

        trace = complex(np.trace(m))
        if abs(trace - 1.0) > atol:
            raise InvalidDensityOperatorError(f"Density operator trace is {trace:.12g}, expected 1")

        eigenvalues = np.linalg.eigvalsh(m)
        if eigenvalues[0] < -atol:
            raise InvalidDensityOperatorError(
                f"Density operator has negative eigenvalue {eigenvalues[0]:.3e}"
            )

        m.setflags(write=False)
        eigenvalues.setflags(write=False)
        self._matrix = m
        self._eigenvalues = eigenvalues

    @classmethod
    def from_pure(cls, psi: Sequence[complex], atol: float = PSD_TOL) -> "DensityOperator":
        """|ψ⟩⟨ψ| for a normalized state vector."""
        vector = np.asarray(psi, dtype=complex).reshape(-1)
        norm = float(np.vdot(vector, vector).real)
        if abs(norm - 1.0) > atol:
            raise InvalidDensityOperatorError(f"State vector has squared norm {norm:.12g}")
        return cls(np.outer(vector, vector.conj()), atol=atol)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityOperator":
        return cls(np.eye(dim, dtype=complex) / dim)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues."""
        return self._eigenvalues

    @property
    def populations(self) -> np.ndarray:
        """Real diagonal in the computational basis."""
        return np.real(np.diag(self._matrix)).copy()

    def purity(self) -> float:
        """Tr(ρ²)."""
        return float(np.real(np.vdot(self._matrix, self._matrix)))

    def is_pure(self, tol: float = PURITY_TOL) -> bool:
        return self.purity() >= 1.0 - tol

    def expectation(self, observable: MatrixLike) -> float:
        """Tr(ρ A) for Hermitian A."""
        return float(np.real(np.trace(self._matrix @ as_matrix(observable))))

    def __repr__(self) -> str:
        return f"DensityOperator(dim={self.dim}, purity={self.purity():.6g})"


def eig_hermitian(m: MatrixLike, atol: float = HERMITIAN_TOL) -> Spectrum:
    """
    Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array-like or DensityOperator
        Hermitian matrix
    atol : float
        Hermiticity tolerance

    Returns
    -------
    Spectrum
        Eigenvalues in ascending order and eigenvectors as columns

    Raises
    ------
    NonHermitianError
        If max |M_ij − conj(M_ji)| exceeds atol
    """
    matrix = as_matrix(m)
    defect = hermiticity_defect(matrix)
    if defect > atol:
        raise NonHermitianError(f"Matrix is not Hermitian (defect {defect:.3e})")

    values, vectors = np.linalg.eigh(matrix)
    # eigh is already ascending; a stable argsort keeps degenerate clusters in solver order
    order = np.argsort(values, kind="stable")
    return Spectrum(values=values[order], vectors=vectors[:, order])


def partial_trace(rho: MatrixLike, keep: Union[Subsystem, str]) -> DensityOperator:
    """
    Reduce a two-qubit density operator to one qubit.

    Parameters
    ----------
    rho : DensityOperator or array-like
        4×4 density operator on |b c⟩
    keep : Subsystem or {"battery", "charger"}
        Qubit that survives the trace

    Returns
    -------
    DensityOperator
        2×2 reduced state

    Examples
    --------
    >>> from qbcap.linalg.paulis import ket
    >>> rho = DensityOperator.from_pure(ket("01"))
    >>> partial_trace(rho, "battery").populations
    array([1., 0.])
    """
    matrix = as_matrix(rho)
    if matrix.shape != (4, 4):
        raise DimensionMismatchError(f"partial_trace expects a 4x4 operator, got {matrix.shape}")

    tensor = matrix.reshape(2, 2, 2, 2)  # (b, c, b', c')
    if Subsystem(keep) is Subsystem.BATTERY:
        reduced = np.einsum("ijkj->ik", tensor)
    else:
        reduced = np.einsum("ijil->jl", tensor)
    return DensityOperator(reduced)


def trace_norm(m: MatrixLike) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(as_matrix(m), compute_uv=False)))


def trace_distance(a: MatrixLike, b: MatrixLike) -> float:
    """½‖a − b‖₁."""
    left, right = as_matrix(a), as_matrix(b)
    if left.shape != right.shape:
        raise DimensionMismatchError(f"Shapes differ: {left.shape} vs {right.shape}")
    return 0.5 * trace_norm(left - right)


def apply_kraus(
    rho: MatrixLike, ks: Sequence[np.ndarray], atol: float = KRAUS_TOL
) -> DensityOperator:
    """
    Apply the channel ρ ↦ Σ K ρ K†.

    Raises
    ------
    NotTracePreservingError
        If Σ K†K differs from the identity by more than atol
    DimensionMismatchError
        If any Kraus operator does not match the state dimension
    """
    matrix = as_matrix(rho)
    kraus = [as_matrix(k) for k in ks]
    if not kraus:
        raise NotTracePreservingError("Empty Kraus set")

    for k in kraus:
        if k.shape != matrix.shape:
            raise DimensionMismatchError(
                f"Kraus operator shape {k.shape} does not match state shape {matrix.shape}"
            )

    completeness = sum(k.conj().T @ k for k in kraus)
    defect = float(np.max(np.abs(completeness - np.eye(matrix.shape[0]))))
    if defect > atol:
        raise NotTracePreservingError(f"Kraus set is not trace preserving (defect {defect:.3e})")

    return DensityOperator(sum(k @ matrix @ k.conj().T for k in kraus))


def spectral_exponential(h: MatrixLike, t: float) -> np.ndarray:
    """exp(−iHt) through the eigendecomposition of H."""
    values, vectors = eig_hermitian(h)
    return (vectors * np.exp(-1j * values * t)) @ vectors.conj().T
