"""
Verification Grid

Cartesian product of model constants and a uniform time axis, with the
seed that drives every random sample drawn during verification.
"""

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Tuple

import numpy as np

from qbcap.config import GridConfig
from qbcap.exceptions import ConfigurationError
from qbcap.model.hamiltonian import HamiltonianParams


@dataclass(frozen=True)
class ParameterGrid:
    """
    Parameter grid for relation checks.

    Parameters
    ----------
    seed : int
        Seed of the random X-states and random parameters (required)
    axes : GridConfig
        Value axes of ω_b, ω_c, J₁, J₂, γ and the time sampling
    points : tuple of HamiltonianParams, optional
        Explicit parameter points replacing the Cartesian product

    Examples
    --------
    >>> grid = ParameterGrid.default(seed=7)
    >>> len(grid.params()), grid.times().size
    (108, 200)
    """

    seed: int
    axes: GridConfig = field(default_factory=GridConfig)
    points: Optional[Tuple[HamiltonianParams, ...]] = None

    def __post_init__(self):
        if self.points is not None and not self.points:
            raise ConfigurationError("Parameter grid must not be empty")

    @classmethod
    def default(cls, seed: int) -> "ParameterGrid":
        return cls(seed=seed)

    def params(self) -> List[HamiltonianParams]:
        """Parameter points in a fixed order."""
        if self.points is not None:
            return list(self.points)

        axes = self.axes
        return [
            HamiltonianParams(omega_b=wb, omega_c=wc, j1=j1, j2=j2)
            for wb, wc, j1, j2 in itertools.product(axes.omega_b, axes.omega_c, axes.j1, axes.j2)
        ]

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.axes.t_max, self.axes.n_times)

    @property
    def gammas(self) -> Tuple[float, ...]:
        return self.axes.gammas

    @property
    def size(self) -> int:
        """Number of (params, t) evaluations."""
        return len(self.params()) * self.axes.n_times

    def restrict(self, predicate: Callable[[HamiltonianParams], bool]) -> "ParameterGrid":
        """
        Keep only the parameter points satisfying ``predicate``.

        Raises
        ------
        ConfigurationError
            If no point survives
        """
        kept = tuple(p for p in self.params() if predicate(p))
        if not kept:
            raise ConfigurationError("Restriction leaves an empty parameter grid")
        return replace(self, points=kept)

    def rng(self) -> np.random.Generator:
        """Fresh generator; equal seeds give equal draws."""
        return np.random.default_rng(self.seed)
