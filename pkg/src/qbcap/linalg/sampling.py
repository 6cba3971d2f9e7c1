"""Seeded random states, Hermitian matrices and Haar unitaries."""

from typing import Optional

import numpy as np
from scipy.stats import unitary_group

from qbcap.linalg.operators import DensityOperator


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """GUE-like Hermitian matrix."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (g + g.conj().T) / 2


def random_density_matrix(
    dim: int, rng: np.random.Generator, rank: Optional[int] = None
) -> DensityOperator:
    """
    Random density operator from the Ginibre ensemble.

    Parameters
    ----------
    dim : int
        Hilbert space dimension
    rng : np.random.Generator
        Seeded generator
    rank : int, optional
        Rank of the state (default: full rank)

    Returns
    -------
    DensityOperator
    """
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return DensityOperator((rho + rho.conj().T) / 2)


def random_unitaries(dim: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Stack of n Haar-random unitaries, shape (n, dim, dim)."""
    samples = unitary_group.rvs(dim, size=n, random_state=rng)
    return np.asarray(samples).reshape(n, dim, dim)
