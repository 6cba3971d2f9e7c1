"""
Subadditivity on X-States

Random X-states, the dephasing map Δ, and numerical checks that subsystem
capacities never exceed the total capacity and that capacity is monotone
under majorization.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from qbcap.capacity.capacity import capacity_spectral
from qbcap.exceptions import InvalidXStateError, NotMajorizedError
from qbcap.linalg.operators import DensityOperator, MatrixLike, as_matrix, partial_trace
from qbcap.model.hamiltonian import (
    HamiltonianParams,
    battery_hamiltonian,
    build_total_hamiltonian,
    charger_hamiltonian,
)
from qbcap.resources.majorization import majorizes

X_STATE_TOL = 1e-10
SUBADDITIVITY_TOL = 1e-9
SCHUR_TOL = 1e-10

# Entries outside the diagonal and anti-diagonal of a 4×4 matrix
_OUTSIDE_X = ~(np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool)))


@dataclass(frozen=True)
class XState:
    """
    Two-qubit state with support on the diagonal and anti-diagonal.

    Parameters
    ----------
    populations : tuple of 4 floats
        ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄
    corner : complex
        ρ₁₄
    center : complex
        ρ₂₃
    """

    populations: Tuple[float, float, float, float]
    corner: complex = 0j
    center: complex = 0j

    def __post_init__(self):
        pops = tuple(float(p) for p in self.populations)
        if len(pops) != 4:
            raise InvalidXStateError(f"Expected 4 populations, got {len(pops)}")
        if min(pops) < -X_STATE_TOL:
            raise InvalidXStateError(f"Populations must be non-negative, got {pops}")
        if abs(sum(pops) - 1.0) > X_STATE_TOL:
            raise InvalidXStateError(f"Populations sum to {sum(pops):.12g}, expected 1")

        p1, p2, p3, p4 = pops
        if abs(self.corner) ** 2 > p1 * p4 + X_STATE_TOL:
            raise InvalidXStateError("|ρ₁₄|² exceeds ρ₁₁ρ₄₄")
        if abs(self.center) ** 2 > p2 * p3 + X_STATE_TOL:
            raise InvalidXStateError("|ρ₂₃|² exceeds ρ₂₂ρ₃₃")

        object.__setattr__(self, "populations", pops)
        object.__setattr__(self, "corner", complex(self.corner))
        object.__setattr__(self, "center", complex(self.center))

    @classmethod
    def from_matrix(cls, m: MatrixLike) -> "XState":
        """Read an X-state off a 4×4 matrix; entries outside the X must vanish."""
        matrix = as_matrix(m)
        if matrix.shape != (4, 4) or np.max(np.abs(matrix[_OUTSIDE_X])) > X_STATE_TOL:
            raise InvalidXStateError("Matrix is not a 4x4 X-state")
        return cls(
            populations=tuple(np.real(np.diag(matrix))),
            corner=matrix[0, 3],
            center=matrix[1, 2],
        )

    def to_matrix(self) -> np.ndarray:
        m = np.diag(np.asarray(self.populations, dtype=complex))
        m[0, 3], m[3, 0] = self.corner, np.conj(self.corner)
        m[1, 2], m[2, 1] = self.center, np.conj(self.center)
        return m

    def density(self) -> DensityOperator:
        return DensityOperator(self.to_matrix())


def random_x_state(rng: np.random.Generator) -> XState:
    """
    Random X-state.

    Populations are flat on the simplex; the moduli of ρ₁₄ and ρ₂₃ are
    uniform over the disc allowed by positivity and their phases uniform.
    """
    pops = rng.dirichlet(np.ones(4))
    p1, p2, p3, p4 = pops

    def coherence(bound: float) -> complex:
        radius = bound * math.sqrt(rng.uniform())
        return radius * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))

    return XState(
        populations=tuple(pops),
        corner=coherence(math.sqrt(p1 * p4)),
        center=coherence(math.sqrt(p2 * p3)),
    )


def dephase(rho: DensityOperator) -> DensityOperator:
    """Δ(ρ): keep only the diagonal in the computational basis."""
    return DensityOperator(np.diag(np.diag(rho.matrix)))


class SubadditivityResult(NamedTuple):
    lhs: float
    rhs: float
    holds: bool

    @property
    def slack(self) -> float:
        """rhs − lhs; negative values are violations."""
        return self.rhs - self.lhs


def subadditivity_check(
    x: XState, params: HamiltonianParams, tol: float = SUBADDITIVITY_TOL
) -> SubadditivityResult:
    """
    Compare C(ρ_b; H_b) + C(ρ_c; H_c) with C(ρ; H).

    Parameters
    ----------
    x : XState
        Two-qubit X-state
    params : HamiltonianParams
        Model constants fixing H_b, H_c and the total H
    tol : float
        Allowed violation

    Returns
    -------
    SubadditivityResult
        ``holds`` is lhs ≤ rhs + tol
    """
    if not isinstance(x, XState):
        raise InvalidXStateError(f"Expected an XState, got {type(x).__name__}")

    params.require_battery_gap()
    rho = x.density()
    lhs = capacity_spectral(
        partial_trace(rho, "battery"), battery_hamiltonian(params)
    ) + capacity_spectral(partial_trace(rho, "charger"), charger_hamiltonian(params))
    rhs = capacity_spectral(rho, build_total_hamiltonian(params))
    return SubadditivityResult(lhs=lhs, rhs=rhs, holds=lhs <= rhs + tol)


def schur_convexity_check(
    rho: DensityOperator, sigma: DensityOperator, h: MatrixLike, tol: float = SCHUR_TOL
) -> bool:
    """
    Check C(ρ; H) ≤ C(σ; H) for a spectrum of ρ majorized by that of σ.

    Raises
    ------
    NotMajorizedError
        If the spectrum of ``rho`` is not majorized by that of ``sigma``
    """
    if not majorizes(rho.eigenvalues, sigma.eigenvalues):
        raise NotMajorizedError("Spectrum of rho is not majorized by spectrum of sigma")
    return capacity_spectral(rho, h) <= capacity_spectral(sigma, h) + tol
