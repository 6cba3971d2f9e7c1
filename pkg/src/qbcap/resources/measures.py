"""
Quantum Resource Measures

Concurrence, F₃ steering, CHSH nonlocality, l₁-coherence, l₁-imaginarity
and state texture, plus the Pauli correlation matrix they are built from.
"""

from dataclasses import asdict, dataclass
from typing import Dict

import numpy as np

from qbcap.exceptions import DimensionMismatchError, NotPureError
from qbcap.linalg.operators import (
    PURITY_TOL,
    DensityOperator,
    clamped_sqrt,
    partial_trace,
    trace_norm,
)
from qbcap.linalg.paulis import PAULIS, two_qubit


# σᵢ⊗σⱼ stacked as (3, 3, 4, 4)
_PAULI_PAIRS = np.array([[two_qubit(left, right) for right in PAULIS] for left in PAULIS])


def _require_two_qubit(state4: DensityOperator) -> None:
    if state4.dim != 4:
        raise DimensionMismatchError(f"Expected a two-qubit state, got dimension {state4.dim}")


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    """Pauli correlation matrix t_ij = Tr(ρ σᵢ⊗σⱼ)."""

    t: np.ndarray

    def gram(self) -> np.ndarray:
        """T Tᵀ."""
        return self.t @ self.t.T

    def __array__(self, dtype=None):
        return self.t if dtype is None else self.t.astype(dtype)


@dataclass(frozen=True)
class ResourceReport:
    """Six resource measures of one state."""

    concurrence: float
    steering: float
    bell: float
    coherence_l1: float
    imaginarity_l1: float
    texture_tr: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def correlation_matrix(state4: DensityOperator) -> CorrelationMatrix:
    """
    Pauli correlation matrix of a two-qubit state.

    For α|01⟩ + β|10⟩ it is [[2Re(α*β), −2Im(α*β), 0], [2Im(α*β), 2Re(α*β), 0], [0, 0, −1]].
    """
    _require_two_qubit(state4)
    t = np.real(np.einsum("ab,ijba->ij", state4.matrix, _PAULI_PAIRS))
    return CorrelationMatrix(t=t)


def concurrence(state4: DensityOperator, purity_tol: float = PURITY_TOL) -> float:
    """
    Pure-state concurrence E = √(2[1 − Tr ρ_b²]).

    Evaluated as 2√(det ρ_b) = 2√(ρ₀₀ρ₁₁ − |ρ₀₁|²), equal to the purity form for a
    unit-trace ρ_b.

    Raises
    ------
    NotPureError
        If Tr(ρ²) < 1 − purity_tol; mixed states need a different formula
    """
    _require_two_qubit(state4)
    purity = state4.purity()
    if purity < 1.0 - purity_tol:
        raise NotPureError(f"Concurrence formula needs a pure state, got purity {purity:.10f}")

    reduced = partial_trace(state4, "battery").matrix
    determinant = np.real(reduced[0, 0] * reduced[1, 1]) - abs(reduced[0, 1]) ** 2
    return 2.0 * clamped_sqrt(determinant)


def steering_f3(state4: DensityOperator) -> float:
    """S = Tr(T Tᵀ) − 1."""
    return float(np.trace(correlation_matrix(state4).gram())) - 1.0


def bell_chsh(state4: DensityOperator) -> float:
    """B = 2√(ι₁ + ι₂) − 2 with ι₁, ι₂ the two largest eigenvalues of T Tᵀ."""
    iota = np.linalg.eigvalsh(correlation_matrix(state4).gram())
    return 2.0 * clamped_sqrt(iota[-1] + iota[-2]) - 2.0


def _off_diagonal(rho: DensityOperator) -> np.ndarray:
    matrix = rho.matrix
    return matrix[~np.eye(matrix.shape[0], dtype=bool)]


def coherence_l1(rho: DensityOperator) -> float:
    """Σ_{i≠j} |ρ_ij|."""
    return float(np.sum(np.abs(_off_diagonal(rho))))


def imaginarity_l1(rho: DensityOperator) -> float:
    """Σ_{i≠j} |Im ρ_ij|."""
    return float(np.sum(np.abs(np.imag(_off_diagonal(rho)))))


def texture_free_state(dim: int) -> np.ndarray:
    """|f₁⟩⟨f₁| with |f₁⟩ the uniform superposition; every entry is 1/d."""
    return np.full((dim, dim), 1.0 / dim, dtype=complex)


def texture_tr(rho: DensityOperator) -> float:
    """
    Trace distance to the texture-free state, ½‖ρ − f₁‖₁.

    Examples
    --------
    >>> round(texture_tr(DensityOperator(np.diag([1.0, 0.0]))), 5)
    0.70711
    """
    return 0.5 * trace_norm(rho.matrix - texture_free_state(rho.dim))


def measure_all(state4: DensityOperator, battery: DensityOperator) -> ResourceReport:
    """
    All six measures; texture on the battery qubit, the rest on the pair.

    Parameters
    ----------
    state4 : DensityOperator
        Pure two-qubit state
    battery : DensityOperator
        Its battery reduction

    Returns
    -------
    ResourceReport
    """
    return ResourceReport(
        concurrence=concurrence(state4),
        steering=steering_f3(state4),
        bell=bell_chsh(state4),
        coherence_l1=coherence_l1(state4),
        imaginarity_l1=imaginarity_l1(state4),
        texture_tr=texture_tr(battery),
    )
