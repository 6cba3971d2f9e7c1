"""Dephasing noise on the evolved battery–charger state."""

from qbcap.noise.dephasing import (
    DRESSED_KINDS,
    NoiseParams,
    capacity_square_gap,
    dephasing_kraus,
    dressed_capacity,
    noisy_capacity_relations,
    noisy_resources,
    noisy_state,
    x_state_concurrence,
    x_state_resources,
)

__all__ = [
    "NoiseParams",
    "DRESSED_KINDS",
    "dephasing_kraus",
    "noisy_state",
    "noisy_resources",
    "x_state_concurrence",
    "x_state_resources",
    "dressed_capacity",
    "noisy_capacity_relations",
    "capacity_square_gap",
]
