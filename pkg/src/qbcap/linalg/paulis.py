"""
Pauli operators and computational basis states.

Two-qubit operators act on the ordered basis |b c⟩ = |00⟩, |01⟩, |10⟩, |11⟩
with the battery as the left (most significant) qubit. σ_z|0⟩ = +|0⟩.
"""

from typing import Tuple

import numpy as np


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=complex)
    array.setflags(write=False)
    return array


IDENTITY = _frozen([[1, 0], [0, 1]])
SIGMA_X = _frozen([[0, 1], [1, 0]])
SIGMA_Y = _frozen([[0, -1j], [1j, 0]])
SIGMA_Z = _frozen([[1, 0], [0, -1]])
SIGMA_PLUS = _frozen([[0, 1], [0, 0]])  # |0⟩⟨1|
SIGMA_MINUS = _frozen([[0, 0], [1, 0]])  # |1⟩⟨0|

PAULIS: Tuple[np.ndarray, np.ndarray, np.ndarray] = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def ket(label: str) -> np.ndarray:
    """
    Computational basis ket for a bit string such as "01".

    Parameters
    ----------
    label : str
        Bit string, most significant qubit first

    Returns
    -------
    np.ndarray
        Complex column of length 2**len(label)
    """
    if not label or set(label) - {"0", "1"}:
        raise ValueError(f"Basis label must be a non-empty bit string, got {label!r}")

    vector = np.zeros(2 ** len(label), dtype=complex)
    vector[int(label, 2)] = 1.0
    return vector


def two_qubit(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Battery ⊗ charger operator."""
    return np.kron(left, right)
