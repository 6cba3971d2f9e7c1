"""
Local Dephasing

Phase-flip channel acting independently on battery and charger, the
resulting noisy evolved state, its resource measures and the capacity
relations that survive the noise.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from qbcap.capacity.capacity import capacity_spectral
from qbcap.exceptions import DimensionMismatchError, GammaAtHalfError, GammaOutOfRangeError
from qbcap.linalg.operators import DensityOperator, clamped_sqrt, partial_trace
from qbcap.linalg.paulis import IDENTITY, SIGMA_Z, two_qubit
from qbcap.logging_config import get_logger
from qbcap.model.evolution import battery_state, coherence_real_part, evolve_closed_form
from qbcap.model.hamiltonian import HamiltonianParams, battery_hamiltonian
from qbcap.resources.measures import (
    ResourceReport,
    bell_chsh,
    coherence_l1,
    imaginarity_l1,
    steering_f3,
    texture_tr,
)
from qbcap.verdicts import RelationId, RelationVerdict, ResidualTracker

logger = get_logger("qbcap.noise")

RELATION_TOL = 1e-9
DRESSED_KINDS = ("entanglement", "steering", "bell", "coherence", "imaginarity")


@dataclass(frozen=True)
class NoiseParams:
    """Phase-flip probability γ ∈ [0, 1]."""

    gamma: float

    def __post_init__(self):
        gamma = float(self.gamma)
        if not 0.0 <= gamma <= 1.0:
            raise GammaOutOfRangeError(f"gamma must be in [0, 1], got {self.gamma}")
        object.__setattr__(self, "gamma", gamma)

    @property
    def attenuation(self) -> float:
        """(1 − 2γ)², the factor multiplying the |01⟩⟨10| coherence."""
        return (1.0 - 2.0 * self.gamma) ** 2

    @property
    def at_half(self) -> bool:
        return math.isclose(self.gamma, 0.5, rel_tol=0.0, abs_tol=1e-12)


def dephasing_kraus(gamma: float) -> List[np.ndarray]:
    """
    Kraus operators of the two-qubit phase-flip channel.

    K₁ = (1−γ) I⊗I, K₂ = √(γ(1−γ)) I⊗σ_z, K₃ = √(γ(1−γ)) σ_z⊗I, K₄ = γ σ_z⊗σ_z.

    Raises
    ------
    GammaOutOfRangeError
        If gamma is outside [0, 1]
    """
    gamma = NoiseParams(gamma).gamma
    mixed = math.sqrt(gamma * (1.0 - gamma))
    return [
        (1.0 - gamma) * two_qubit(IDENTITY, IDENTITY),
        mixed * two_qubit(IDENTITY, SIGMA_Z),
        mixed * two_qubit(SIGMA_Z, IDENTITY),
        gamma * two_qubit(SIGMA_Z, SIGMA_Z),
    ]


def noisy_state(params: HamiltonianParams, t: float, gamma: float) -> DensityOperator:
    """
    Dephased evolved state.

    Populations (0, |α|², |β|², 0) are kept; the coherence αβ* is scaled by
    (1 − 2γ)².
    """
    noise = NoiseParams(gamma)
    state = evolve_closed_form(params, t)
    coherence = noise.attenuation * state.alpha * np.conj(state.beta)

    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = abs(state.alpha) ** 2
    m[2, 2] = abs(state.beta) ** 2
    m[1, 2] = coherence
    m[2, 1] = np.conj(coherence)
    return DensityOperator(m)


def x_state_concurrence(rho: DensityOperator) -> float:
    """
    Concurrence of a two-qubit X-state.

    2·max(0, |ρ₂₃| − √(ρ₁₁ρ₄₄), |ρ₁₄| − √(ρ₂₂ρ₃₃)).
    """
    if rho.dim != 4:
        raise DimensionMismatchError(f"Expected a two-qubit state, got dimension {rho.dim}")

    m = rho.matrix
    p = np.clip(np.real(np.diag(m)), 0.0, None)
    center = abs(m[1, 2]) - math.sqrt(p[0] * p[3])
    corner = abs(m[0, 3]) - math.sqrt(p[1] * p[2])
    return 2.0 * max(0.0, center, corner)


def noisy_resources(params: HamiltonianParams, t: float, gamma: float) -> ResourceReport:
    """
    Resource measures of the dephased evolved state.

    Texture is evaluated on the battery qubit, which the channel leaves
    unchanged.

    Examples
    --------
    >>> params = HamiltonianParams(1.0, 1.0, 0.1, 0.1)
    >>> round(noisy_resources(params, np.pi / 0.4, 0.25).concurrence, 12)
    0.25
    """
    return x_state_resources(noisy_state(params, t, gamma))


def x_state_resources(
    rho: DensityOperator, battery: Optional[DensityOperator] = None
) -> ResourceReport:
    """Resource measures of a two-qubit X-state; concurrence from the X-state formula."""
    battery = battery if battery is not None else partial_trace(rho, "battery")
    return ResourceReport(
        concurrence=x_state_concurrence(rho),
        steering=steering_f3(rho),
        bell=bell_chsh(rho),
        coherence_l1=coherence_l1(rho),
        imaginarity_l1=imaginarity_l1(rho),
        texture_tr=texture_tr(battery),
    )


def dressed_capacity(
    kind: str,
    value: float,
    gamma: float,
    omega_b: float,
    re_alpha_beta: Optional[float] = None,
) -> float:
    """
    Battery capacity recovered from a dephased resource value.

    Parameters
    ----------
    kind : str
        One of "entanglement", "steering", "bell", "coherence", "imaginarity"
    value : float
        Measured resource of the dephased state
    gamma : float
        Phase-flip probability
    omega_b : float
        Battery field strength
    re_alpha_beta : float, optional
        Re(αβ*) of the noiseless amplitudes (required for "imaginarity")

    Raises
    ------
    GammaAtHalfError
        At γ = 1/2, where the attenuation (1 − 2γ)⁴ vanishes
    """
    noise = NoiseParams(gamma)
    if noise.at_half:
        raise GammaAtHalfError(f"The {kind} relation divides by (1 - 2 gamma)^4 = 0")

    a4 = noise.attenuation**2
    if kind == "entanglement":
        argument = 1.0 - value**2 / a4
    elif kind == "steering":
        argument = 1.0 - value / (2.0 * a4)
    elif kind == "bell":
        argument = 1.0 - (value + value**2 / 4.0) / a4
    elif kind == "coherence":
        argument = 1.0 - value**2 / a4
    elif kind == "imaginarity":
        if re_alpha_beta is None:
            raise ValueError("re_alpha_beta is required for the imaginarity relation")
        argument = 1.0 - 4.0 * re_alpha_beta**2 - value**2 / a4
    else:
        raise ValueError(f"Unknown resource kind: {kind!r}. Must be one of {DRESSED_KINDS}")

    return 2.0 * omega_b * clamped_sqrt(argument)


def capacity_square_gap(measured, predicted, omega_b: float):
    """
    |(C_measured/2ω_b)² − (C_predicted/2ω_b)²|.

    The dressed relations are compared in this squared form, the form in
    which they are solved for the capacity.
    """
    scale = 2.0 * omega_b
    return np.abs((np.asarray(measured) / scale) ** 2 - (np.asarray(predicted) / scale) ** 2)


def noisy_capacity_relations(
    params: HamiltonianParams, t: float, gamma: float, tol: float = RELATION_TOL
) -> Dict[str, RelationVerdict]:
    """
    Check the capacity relations of the dephased state at one time.

    Returns verdicts keyed by "capacity_invariance", "texture" and, for
    γ ≠ 1/2, the five dressed relations of :data:`DRESSED_KINDS`.
    Capacity invariance is an absolute difference; the other relations use
    :func:`capacity_square_gap`.
    """
    params.require_battery_gap()
    h_b = battery_hamiltonian(params)
    rho = noisy_state(params, t, gamma)
    capacity = capacity_spectral(partial_trace(rho, "battery"), h_b)
    noiseless = capacity_spectral(battery_state(params, t), h_b)
    report = noisy_resources(params, t, gamma)

    residuals = {
        "capacity_invariance": abs(capacity - noiseless),
        "texture": capacity_square_gap(
            capacity,
            2.0 * params.omega_b * clamped_sqrt(4.0 * report.texture_tr**2 - 1.0),
            params.omega_b,
        ),
    }

    measured = {
        "entanglement": report.concurrence,
        "steering": report.steering,
        "bell": report.bell,
        "coherence": report.coherence_l1,
        "imaginarity": report.imaginarity_l1,
    }
    re_ab = float(coherence_real_part(params, t))
    for kind in DRESSED_KINDS:
        try:
            predicted = dressed_capacity(kind, measured[kind], gamma, params.omega_b, re_ab)
        except GammaAtHalfError:
            logger.info(f"Skipping dressed {kind} relation at gamma = 1/2")
            continue
        residuals[kind] = capacity_square_gap(capacity, predicted, params.omega_b)

    verdicts = {}
    for label, residual in residuals.items():
        tracker = ResidualTracker()
        tracker.update(residual, params=params, times=t, gamma=gamma)
        verdicts[label] = tracker.verdict(RelationId.APPB_FAMILY, tol, label=label)
    return verdicts
