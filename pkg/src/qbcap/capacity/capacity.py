"""
Battery Capacity

Capacity as the energy gap between the active and passive states of a
density operator, evaluated from the ordered spectra of the state and the
Hamiltonian, and its split into battery, charger and residual parts.
"""

from dataclasses import asdict, dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from qbcap.exceptions import DimensionMismatchError
from qbcap.linalg.operators import DensityOperator, MatrixLike, as_matrix, eig_hermitian
from qbcap.linalg.sampling import random_unitaries
from qbcap.model.evolution import battery_state, charger_state
from qbcap.model.hamiltonian import (
    HamiltonianParams,
    battery_hamiltonian,
    charger_hamiltonian,
    model_spectrum,
)


@dataclass(frozen=True)
class CapacityReport:
    """Battery, charger and total capacities with the residual."""

    battery: float
    charger: float
    total: float
    residual: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def _check_dimensions(rho: DensityOperator, h: np.ndarray) -> None:
    if h.shape != (rho.dim, rho.dim):
        raise DimensionMismatchError(
            f"Hamiltonian shape {h.shape} does not match state dimension {rho.dim}"
        )


def capacity_spectral(rho: DensityOperator, h: MatrixLike) -> float:
    """
    C(ρ; H) = Σᵢ εᵢ(λᵢ − λ_{d−1−i}) with both spectra ascending.

    Parameters
    ----------
    rho : DensityOperator
        State
    h : array-like
        Hermitian Hamiltonian of the same dimension

    Returns
    -------
    float
        Non-negative capacity

    Examples
    --------
    >>> capacity_spectral(DensityOperator(np.diag([0.25, 0.75])), np.diag([-1.0, 1.0]))
    1.0
    """
    h = as_matrix(h)
    _check_dimensions(rho, h)
    return capacity_from_spectra(rho.eigenvalues, eig_hermitian(h).values)


def capacity_from_spectra(lam: np.ndarray, eps: np.ndarray) -> float:
    """
    Capacity from ascending state and Hamiltonian spectra of equal length.

    Lets a caller diagonalize a fixed Hamiltonian once for many states.

    Examples
    --------
    >>> capacity_from_spectra(np.array([0.25, 0.75]), np.array([-1.0, 1.0]))
    1.0
    """
    lam = np.asarray(lam, dtype=float)
    eps = np.asarray(eps, dtype=float)
    if lam.shape != eps.shape:
        raise DimensionMismatchError(f"Spectra differ in shape: {lam.shape} vs {eps.shape}")
    return max(0.0, float(np.dot(eps, lam - lam[::-1])))


def active_passive(rho: DensityOperator, h: MatrixLike) -> Tuple[DensityOperator, DensityOperator]:
    """
    Highest- and lowest-energy states on the unitary orbit of ``rho``.

    The passive state puts the largest population on the lowest energy
    level; the active state puts it on the highest. For degenerate spectra
    the eigenvectors returned by the solver are used.

    Returns
    -------
    (active, passive) : tuple of DensityOperator
    """
    h = as_matrix(h)
    _check_dimensions(rho, h)
    vectors = eig_hermitian(h).vectors
    lam = rho.eigenvalues

    def on_energy_basis(populations: np.ndarray) -> DensityOperator:
        return DensityOperator((vectors * populations) @ vectors.conj().T)

    return on_energy_basis(lam), on_energy_basis(lam[::-1])


def capacity_unitary_orbit(
    rho: DensityOperator,
    h: MatrixLike,
    n_samples: int = 100_000,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Brute-force capacity: max − min of Tr(UρU†H) over Haar-random unitaries.

    Converges to :func:`capacity_spectral` from below as ``n_samples`` grows.
    """
    h = as_matrix(h)
    _check_dimensions(rho, h)
    rng = rng if rng is not None else np.random.default_rng()
    unitaries = random_unitaries(rho.dim, n_samples, rng)
    rotated = unitaries @ rho.matrix @ np.conj(np.swapaxes(unitaries, 1, 2))
    energies = np.real(np.einsum("nij,ji->n", rotated, h))
    return float(energies.max() - energies.min())


def capacity_report(params: HamiltonianParams, t: float) -> CapacityReport:
    """
    Capacities of the evolved state at time t.

    battery = 2ω_b|1 − 2p(t)|, charger = 2ω_c|1 − 2p(t)|, total = ε₄ − ε₁
    (the evolved state stays pure), residual = total − battery − charger.

    Examples
    --------
    >>> report = capacity_report(HamiltonianParams(1.0, 1.0, 0.1, 0.1), 0.0)
    >>> report.battery, report.charger
    (2.0, 2.0)
    """
    params.require_battery_gap()
    battery = capacity_spectral(battery_state(params, t), battery_hamiltonian(params))
    charger = capacity_spectral(charger_state(params, t), charger_hamiltonian(params))
    total = model_spectrum(params).total_width
    return CapacityReport(
        battery=battery,
        charger=charger,
        total=total,
        residual=total - battery - charger,
    )
