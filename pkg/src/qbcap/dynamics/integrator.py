"""
Von Neumann Integration

Numerical oracle for the closed form: integrates dρ/dt = −i[H, ρ] from
ρ(0) = |01⟩⟨01| with fixed-substep RK4 (default) or Dormand–Prince.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from qbcap.config import IntegratorConfig, get_config
from qbcap.exceptions import (
    ConfigurationError,
    HermiticityDriftError,
    IntegrationError,
    StepTooCoarseError,
)
from qbcap.linalg.operators import DensityOperator, as_matrix
from qbcap.linalg.paulis import ket
from qbcap.logging_config import LoggerMixin
from qbcap.model.hamiltonian import (
    HamiltonianParams,
    battery_hamiltonian,
    build_total_hamiltonian,
    charger_hamiltonian,
)

TRAJECTORY_TOL = 1e-8
PURITY_DRIFT = 1e-7


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Sampled two-qubit states.

    Attributes
    ----------
    times : np.ndarray
        Strictly increasing sample times starting at 0
    states : tuple of DensityOperator
        4×4 state at each sample time
    substeps : int
        RK4 substeps per sample interval (0 for Dormand–Prince)
    method : str
        "rk4" or "dopri"
    max_symmetrization : float
        Largest entry removed by ρ ← (ρ + ρ†)/2; never above the configured limit
    """

    times: np.ndarray
    states: Tuple[DensityOperator, ...]
    substeps: int = 0
    method: str = "rk4"
    max_symmetrization: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if len(self.times) != len(self.states):
            raise IntegrationError(
                f"{len(self.times)} sample times but {len(self.states)} states"
            )
        if len(self.times) == 0 or self.times[0] != 0.0:
            raise IntegrationError("Trajectory must start at t = 0")
        if np.any(np.diff(self.times) <= 0):
            raise IntegrationError("Trajectory times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)

    @property
    def matrices(self) -> np.ndarray:
        """States stacked as an (n, 4, 4) array."""
        return np.stack([state.matrix for state in self.states])

    def reduced_matrices(self, keep: str = "battery") -> np.ndarray:
        """Reduced one-qubit states stacked as an (n, 2, 2) array."""
        tensor = self.matrices.reshape(-1, 2, 2, 2, 2)
        if keep == "battery":
            return np.einsum("nijkj->nik", tensor)
        return np.einsum("nijil->njl", tensor)


class VonNeumannIntegrator(LoggerMixin):
    """
    Integrator for dρ/dt = −i[H, ρ] with a time-independent Hamiltonian.

    RK4 runs a fixed number of substeps between output samples. The count is
    the smallest power of two whose step-doubling error estimate over the
    first sample interval is below ``local_error_target``; the finer of the
    compared runs is used. Each substep is followed by ρ ← (ρ + ρ†)/2.

    Parameters
    ----------
    hamiltonian : np.ndarray
        Hermitian generator
    config : IntegratorConfig, optional
        Integrator settings (default: global configuration)

    Examples
    --------
    >>> h = build_total_hamiltonian(HamiltonianParams(1.0, 1.0, 0.1, 0.1))
    >>> integrator = VonNeumannIntegrator(h)
    >>> trajectory = integrator.run(initial_state(), np.linspace(0, 50, 1000))
    """

    def __init__(self, hamiltonian: np.ndarray, config: Optional[IntegratorConfig] = None):
        self.hamiltonian = as_matrix(hamiltonian)
        self.config = config if config is not None else get_config().integrator

    def derivative(self, rho: np.ndarray) -> np.ndarray:
        h = self.hamiltonian
        return -1j * (h @ rho - rho @ h)

    def rk4_step(self, rho: np.ndarray, dt: float) -> np.ndarray:
        k1 = self.derivative(rho)
        k2 = self.derivative(rho + 0.5 * dt * k1)
        k3 = self.derivative(rho + 0.5 * dt * k2)
        k4 = self.derivative(rho + dt * k3)
        return rho + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)

    def advance(self, rho: np.ndarray, dt: float, substeps: int) -> Tuple[np.ndarray, float]:
        """Take ``substeps`` RK4 steps covering ``dt``; return state and largest symmetrization."""
        h = dt / substeps
        largest = 0.0
        for _ in range(substeps):
            rho = self.rk4_step(rho, h)
            symmetric = 0.5 * (rho + rho.conj().T)
            largest = max(largest, float(np.max(np.abs(rho - symmetric))))
            rho = symmetric
        return rho, largest

    def choose_substeps(self, rho0: np.ndarray, dt: float) -> int:
        """
        Substep count per sample interval from step doubling.

        Raises
        ------
        StepTooCoarseError
            If the estimate is still above ``max_error`` at ``max_substeps``
        """
        n = 1
        while True:
            coarse, _ = self.advance(rho0, dt, n)
            fine, _ = self.advance(rho0, dt, 2 * n)
            error = float(np.max(np.abs(coarse - fine)))
            if error < self.config.local_error_target:
                self.logger.debug(f"dt={dt:.6g}: {2 * n} substeps (doubling error {error:.3e})")
                return 2 * n

            if 2 * n >= self.config.max_substeps:
                if error > self.config.max_error:
                    raise StepTooCoarseError(
                        f"Step-doubling error {error:.3e} exceeds {self.config.max_error:.1e} "
                        f"at {2 * n} substeps per interval of {dt:.6g}"
                    )
                self.logger.warning(
                    f"Substep cap reached with doubling error {error:.3e}; continuing"
                )
                return 2 * n
            n *= 2

    def run(self, rho0: np.ndarray, times: Sequence[float]) -> Trajectory:
        """
        Integrate from ``rho0`` at ``times[0] = 0`` and sample at ``times``.

        Uniform sample spacing is assumed for RK4.
        """
        times = np.asarray(times, dtype=float)
        rho = as_matrix(rho0).copy()

        if self.config.method == "dopri":
            return self._run_dopri(rho, times)

        dt = float(times[1] - times[0])
        substeps = self.choose_substeps(rho, dt)

        samples = [rho]
        largest = 0.0
        for _ in range(1, len(times)):
            rho, correction = self.advance(rho, dt, substeps)
            largest = max(largest, correction)
            samples.append(rho)

        self.logger.debug(f"Largest symmetrization correction: {largest:.3e}")
        return self._finish(times, samples, substeps, "rk4", largest)

    def _run_dopri(self, rho: np.ndarray, times: np.ndarray) -> Trajectory:
        shape = rho.shape

        def rhs(_t, y):
            return self.derivative(y.reshape(shape)).reshape(-1)

        solution = solve_ivp(
            rhs,
            (float(times[0]), float(times[-1])),
            rho.reshape(-1),
            method="RK45",
            t_eval=times,
            rtol=self.config.rtol,
            atol=self.config.atol,
        )
        if not solution.success:
            raise IntegrationError(f"Dormand-Prince integration failed: {solution.message}")

        samples = []
        largest = 0.0
        for column in solution.y.T:
            m = column.reshape(shape)
            symmetric = 0.5 * (m + m.conj().T)
            largest = max(largest, float(np.max(np.abs(m - symmetric))))
            samples.append(symmetric)

        return self._finish(times, samples, 0, "dopri", largest)

    def _finish(
        self, times: np.ndarray, samples, substeps: int, method: str, largest: float
    ) -> Trajectory:
        if largest > self.config.symmetrization_limit:
            raise HermiticityDriftError(
                f"Symmetrization correction {largest:.3e} exceeds "
                f"{self.config.symmetrization_limit:.1e} ({method})"
            )

        states = tuple(DensityOperator(m, atol=TRAJECTORY_TOL) for m in samples)
        drift = max(abs(state.purity() - states[0].purity()) for state in states)
        if drift > PURITY_DRIFT:
            raise IntegrationError(f"Purity drifted by {drift:.3e} along the trajectory")

        return Trajectory(
            times=times,
            states=states,
            substeps=substeps,
            method=method,
            max_symmetrization=largest,
        )


def initial_state() -> np.ndarray:
    """|01⟩⟨01|: battery in its ground state, charger excited."""
    psi = ket("01")
    return np.outer(psi, psi.conj())


def integrate(
    params: HamiltonianParams,
    t_max: float,
    steps: int,
    config: Optional[IntegratorConfig] = None,
) -> Trajectory:
    """
    Integrate the von Neumann equation for the battery–charger model.

    Parameters
    ----------
    params : HamiltonianParams
        Model constants
    t_max : float
        Final time (> 0)
    steps : int
        Number of uniformly spaced samples including t = 0 and t_max (≥ 2)
    config : IntegratorConfig, optional
        Integrator settings

    Returns
    -------
    Trajectory

    Examples
    --------
    >>> traj = integrate(HamiltonianParams(1.0, 1.0, 0.1, 0.1), 50.0, 1000)
    >>> len(traj)
    1000
    """
    if not t_max > 0:
        raise ConfigurationError(f"t_max must be positive, got {t_max}")
    if steps < 2:
        raise ConfigurationError(f"steps must be >= 2, got {steps}")

    integrator = VonNeumannIntegrator(build_total_hamiltonian(params), config)
    return integrator.run(initial_state(), np.linspace(0.0, t_max, steps))


def _energy_series(reduced: np.ndarray, hamiltonian: np.ndarray) -> np.ndarray:
    return np.real(np.einsum("nij,ji->n", reduced, hamiltonian))


def battery_energy_series(traj: Trajectory, params: HamiltonianParams) -> np.ndarray:
    """⟨H_b⟩(tᵢ) = Tr(ρ_b(tᵢ) H_b) along the trajectory."""
    return _energy_series(traj.reduced_matrices("battery"), battery_hamiltonian(params))


def charger_energy_series(traj: Trajectory, params: HamiltonianParams) -> np.ndarray:
    """⟨H_c⟩(tᵢ) = Tr(ρ_c(tᵢ) H_c) along the trajectory."""
    return _energy_series(traj.reduced_matrices("charger"), charger_hamiltonian(params))
