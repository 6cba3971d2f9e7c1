"""Numerical integration of the von Neumann equation."""

from qbcap.dynamics.integrator import (
    Trajectory,
    VonNeumannIntegrator,
    battery_energy_series,
    charger_energy_series,
    initial_state,
    integrate,
)

__all__ = [
    "Trajectory",
    "VonNeumannIntegrator",
    "integrate",
    "initial_state",
    "battery_energy_series",
    "charger_energy_series",
]
