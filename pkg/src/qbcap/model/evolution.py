"""
Closed-Form Evolution

Exact amplitudes of |ψ(t)⟩ = α|01⟩ + β|10⟩ starting from |01⟩ (battery in
its ground state, charger excited) and the reduced battery/charger states.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from qbcap.linalg.operators import DensityOperator
from qbcap.model.hamiltonian import HamiltonianParams, model_spectrum

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class EvolvedState:
    """Amplitudes of the evolved state at time ``t``."""

    t: float
    alpha: complex
    beta: complex

    @property
    def p(self) -> float:
        """Battery ground-state population |α|²."""
        return float(abs(self.alpha) ** 2)

    @property
    def state_vector(self) -> np.ndarray:
        """Coefficients on |00⟩, |01⟩, |10⟩, |11⟩."""
        return np.array([0.0, self.alpha, self.beta, 0.0], dtype=complex)

    def density(self) -> DensityOperator:
        return DensityOperator.from_pure(self.state_vector)


def evolve_amplitudes(params: HamiltonianParams, times: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised closed-form amplitudes.

    Parameters
    ----------
    params : HamiltonianParams
        Model constants
    times : float or np.ndarray
        Evaluation times

    Returns
    -------
    alpha, beta : np.ndarray
        Complex amplitudes with the shape of ``times``
    """
    t = np.asarray(times, dtype=float)

    if params.j1 == 0:
        # Diagonal block: |01⟩ only picks up a phase
        alpha = np.exp(-1j * (params.detuning - params.j2) * t)
        return alpha, np.zeros_like(alpha)

    # e^{−iBt} = e^{iJ₂t}(cos(rt) − i sin(rt) M/r), B = M − J₂ with M = [[Δ, J₁], [J₁, −Δ]]
    r = params.rabi
    phase = np.exp(1j * params.j2 * t)
    sine = np.sin(r * t)
    alpha = phase * (np.cos(r * t) - 1j * (params.detuning / r) * sine)
    beta = -1j * phase * (params.j1 / r) * sine
    return alpha, beta


def evolve_closed_form(params: HamiltonianParams, t: float) -> EvolvedState:
    """
    Evolved state at time t.

    α = (e^{−ie₁t}ξ₁ − e^{−ie₂t}ξ₂)/(ξ₁−ξ₂), β = (e^{−ie₁t} − e^{−ie₂t})/(ξ₁−ξ₂);
    for J₁ = 0, α = e^{−i(ω_b−ω_c−J₂)t} and β = 0.
    Evaluated in the equivalent rotation form α = e^{iJ₂t}(cos rt − i(Δ/r) sin rt),
    β = −i e^{iJ₂t}(J₁/r) sin rt with r = √(J₁² + Δ²), which is exact at t = 0.

    Examples
    --------
    >>> state = evolve_closed_form(HamiltonianParams(1.0, 1.0, 0.1, 0.1), 0.0)
    >>> abs(state.alpha), abs(state.beta)
    (1.0, 0.0)
    """
    alpha, beta = evolve_amplitudes(params, float(t))
    return EvolvedState(t=float(t), alpha=complex(alpha), beta=complex(beta))


def battery_population(params: HamiltonianParams, times: ArrayLike) -> np.ndarray:
    """
    p(t) = [1 + cos((e₁−e₂)t) + 2(ω_b−ω_c)²/J₁²] / [2 + 2(ω_b−ω_c)²/J₁²].

    Equal to 1 at all times when J₁ = 0.
    """
    t = np.asarray(times, dtype=float)
    if params.j1 == 0:
        return np.ones_like(t)

    ratio = (params.detuning / params.j1) ** 2
    splitting = model_spectrum(params).splitting
    return (1.0 + np.cos(splitting * t) + 2.0 * ratio) / (2.0 + 2.0 * ratio)


def coherence_real_part(params: HamiltonianParams, times: ArrayLike) -> np.ndarray:
    """
    Closed form of Re(αβ*).

    (Δ/J₁)(1 − cos((e₁−e₂)t)) / (2(J₁² + Δ²)/J₁²) with the signed detuning
    Δ = ω_b − ω_c; zero when J₁ = 0.
    """
    t = np.asarray(times, dtype=float)
    if params.j1 == 0:
        return np.zeros_like(t)

    splitting = model_spectrum(params).splitting
    numerator = (params.detuning / params.j1) * (1.0 - np.cos(splitting * t))
    return numerator / (2.0 * params.rabi**2 / params.j1**2)


def imaginarity_closed_form(params: HamiltonianParams, times: ArrayLike) -> np.ndarray:
    """(√(J₁²+Δ²)/|J₁|)·|sin((e₁−e₂)t)| / (1 + Δ²/J₁²); zero when J₁ = 0."""
    t = np.asarray(times, dtype=float)
    if params.j1 == 0:
        return np.zeros_like(t)

    splitting = model_spectrum(params).splitting
    ratio = (params.detuning / params.j1) ** 2
    return (params.rabi / abs(params.j1)) * np.abs(np.sin(splitting * t)) / (1.0 + ratio)


def evolved_density(params: HamiltonianParams, t: float) -> DensityOperator:
    """|ψ(t)⟩⟨ψ(t)| on the full two-qubit space."""
    return evolve_closed_form(params, t).density()


def battery_state(params: HamiltonianParams, t: float) -> DensityOperator:
    """
    Reduced battery state diag(p(t), 1 − p(t)).

    Examples
    --------
    >>> params = HamiltonianParams(1.0, 1.0, 0.1, 0.1)
    >>> battery_state(params, 0.0).populations
    array([1., 0.])
    """
    p = float(battery_population(params, t))
    return DensityOperator(np.diag([p, 1.0 - p]).astype(complex))


def charger_state(params: HamiltonianParams, t: float) -> DensityOperator:
    """Reduced charger state diag(1 − p(t), p(t))."""
    p = float(battery_population(params, t))
    return DensityOperator(np.diag([1.0 - p, p]).astype(complex))
