"""Battery–charger model: Hamiltonian, spectrum and closed-form evolution."""

from qbcap.model.evolution import (
    EvolvedState,
    battery_population,
    battery_state,
    charger_state,
    coherence_real_part,
    evolve_amplitudes,
    evolve_closed_form,
    evolved_density,
    imaginarity_closed_form,
)
from qbcap.model.hamiltonian import (
    HamiltonianParams,
    ModelSpectrum,
    battery_hamiltonian,
    build_total_hamiltonian,
    charger_hamiltonian,
    effective_block,
    interaction_hamiltonian,
    model_spectrum,
)

__all__ = [
    "HamiltonianParams",
    "ModelSpectrum",
    "EvolvedState",
    "build_total_hamiltonian",
    "effective_block",
    "battery_hamiltonian",
    "charger_hamiltonian",
    "interaction_hamiltonian",
    "model_spectrum",
    "evolve_amplitudes",
    "evolve_closed_form",
    "evolved_density",
    "battery_population",
    "battery_state",
    "charger_state",
    "coherence_real_part",
    "imaginarity_closed_form",
]
