"""
Battery–Charger Hamiltonian

Two spins in local fields coupled by flip-flop (J₁) and Ising (J₂) terms,
the excitation-preserving 2×2 block on span{|01⟩, |10⟩} and the closed-form
spectrum.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from qbcap.exceptions import ParameterError
from qbcap.linalg.paulis import IDENTITY, SIGMA_MINUS, SIGMA_PLUS, SIGMA_Z, two_qubit


@dataclass(frozen=True)
class HamiltonianParams:
    """
    Model constants (ħ = 1).

    Parameters
    ----------
    omega_b : float
        Battery field strength; the battery gap is 2ω_b
    omega_c : float
        Charger field strength
    j1 : float
        Flip-flop interaction strength
    j2 : float
        Ising interaction strength

    Examples
    --------
    >>> params = HamiltonianParams(omega_b=1.0, omega_c=1.2, j1=1.0, j2=1.0)
    >>> round(params.delta, 12)
    0.2
    """

    omega_b: float
    omega_c: float
    j1: float
    j2: float

    def __post_init__(self):
        for name in ("omega_b", "omega_c", "j1", "j2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ParameterError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

        if self.omega_b < 0:
            raise ParameterError(f"omega_b must be non-negative, got {self.omega_b}")

    @property
    def detuning(self) -> float:
        """Signed ω_b − ω_c as it enters the single-excitation block."""
        return self.omega_b - self.omega_c

    @property
    def delta(self) -> float:
        """Δ = |ω_b − ω_c|."""
        return abs(self.omega_b - self.omega_c)

    @property
    def rabi(self) -> float:
        """√(J₁² + (ω_b − ω_c)²), half the splitting e₁ − e₂."""
        return math.hypot(self.j1, self.detuning)

    @property
    def is_resonant(self) -> bool:
        return self.omega_b == self.omega_c

    def require_battery_gap(self) -> "HamiltonianParams":
        """
        Reject models without a positive battery gap.

        Capacity relations normalise by 2ω_b, so every capacity and
        verification entry point calls this.
        """
        if not self.omega_b > 0:
            raise ParameterError(f"omega_b must be positive, got {self.omega_b}")
        return self

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.omega_b, self.omega_c, self.j1, self.j2)


@dataclass(frozen=True)
class ModelSpectrum:
    """
    Closed-form spectral data of the model.

    ``e1 ≥ e2`` are the eigenvalues of the single-excitation block and
    ``xi1``, ``xi2`` the ratios of its eigenvector components (None when
    J₁ = 0). ``total_eps`` holds the four eigenvalues of the full
    Hamiltonian in ascending order.
    """

    e1: float
    e2: float
    xi1: Optional[float]
    xi2: Optional[float]
    total_eps: Tuple[float, float, float, float]

    @property
    def splitting(self) -> float:
        """e₁ − e₂."""
        return self.e1 - self.e2

    @property
    def total_width(self) -> float:
        """ε₄ − ε₁, the capacity of any pure two-qubit state."""
        return self.total_eps[3] - self.total_eps[0]


def battery_hamiltonian(params: HamiltonianParams) -> np.ndarray:
    """H_b with ground state |0⟩ at −ω_b."""
    return -params.omega_b * np.asarray(SIGMA_Z)


def charger_hamiltonian(params: HamiltonianParams) -> np.ndarray:
    """H_c with ground state |0⟩ at −ω_c."""
    return -params.omega_c * np.asarray(SIGMA_Z)


def interaction_hamiltonian(params: HamiltonianParams) -> np.ndarray:
    """J₁(σ₊σ₋ + σ₋σ₊) + J₂ σ_z σ_z."""
    flip_flop = two_qubit(SIGMA_PLUS, SIGMA_MINUS) + two_qubit(SIGMA_MINUS, SIGMA_PLUS)
    return params.j1 * flip_flop + params.j2 * two_qubit(SIGMA_Z, SIGMA_Z)


def build_total_hamiltonian(params: HamiltonianParams) -> np.ndarray:
    """
    Full 4×4 Hamiltonian on |b c⟩.

    The local field terms enter as +ω σ_z on each spin so that the block on
    span{|01⟩, |10⟩} is exactly :func:`effective_block`, the generator of
    the closed-form evolution. The spectrum is
    {−J₂ ± √(J₁² + (ω_b−ω_c)²), J₂ ± (ω_b+ω_c)} either way.

    Parameters
    ----------
    params : HamiltonianParams
        Model constants

    Returns
    -------
    np.ndarray
        Hermitian 4×4 complex matrix
    """
    local = params.omega_b * two_qubit(SIGMA_Z, IDENTITY) + params.omega_c * two_qubit(
        IDENTITY, SIGMA_Z
    )
    return local + interaction_hamiltonian(params)


def effective_block(params: HamiltonianParams) -> np.ndarray:
    """[[ω_b−ω_c−J₂, J₁], [J₁, ω_c−ω_b−J₂]] on (|01⟩, |10⟩)."""
    d = params.detuning
    return np.array(
        [[d - params.j2, params.j1], [params.j1, -d - params.j2]],
        dtype=complex,
    )


def model_spectrum(params: HamiltonianParams) -> ModelSpectrum:
    """
    Closed-form eigenvalues and eigenvector ratios.

    ξ₁,₂ = (ω_b − ω_c ± r)/J₁ with r = √(J₁² + (ω_b−ω_c)²). The root prone to
    cancellation is taken from ξ₁ξ₂ = −1.
    """
    r = params.rabi
    e1, e2 = r - params.j2, -r - params.j2

    xi1: Optional[float]
    xi2: Optional[float]
    if params.j1 == 0:
        xi1 = xi2 = None
    elif params.detuning >= 0:
        xi1 = (params.detuning + r) / params.j1
        xi2 = -1.0 / xi1
    else:
        xi2 = (params.detuning - r) / params.j1
        xi1 = -1.0 / xi2

    s = params.omega_b + params.omega_c
    eps = sorted([e2, e1, params.j2 - s, params.j2 + s])
    return ModelSpectrum(e1=e1, e2=e2, xi1=xi1, xi2=xi2, total_eps=tuple(eps))
