"""Majorization of probability vectors."""

from typing import Sequence

import numpy as np

from qbcap.exceptions import LengthMismatchError, NotNormalizedError

NORMALIZATION_TOL = 1e-10


def majorizes(lam: Sequence[float], eta: Sequence[float], tol: float = NORMALIZATION_TOL) -> bool:
    """
    Whether ``eta`` majorizes ``lam`` (λ ≺ η).

    True iff every partial sum of the k largest entries of ``eta`` is at
    least the corresponding sum for ``lam``. Input order does not matter.

    Parameters
    ----------
    lam, eta : sequence of float
        Probability vectors of equal length
    tol : float
        Normalization and partial-sum tolerance

    Raises
    ------
    LengthMismatchError
        If the vectors differ in length
    NotNormalizedError
        If either vector does not sum to 1

    Examples
    --------
    >>> majorizes([0.5, 0.5], [0.0, 1.0])
    True
    >>> majorizes([0.0, 1.0], [0.5, 0.5])
    False
    """
    lam_arr = np.asarray(lam, dtype=float).reshape(-1)
    eta_arr = np.asarray(eta, dtype=float).reshape(-1)

    if lam_arr.size != eta_arr.size:
        raise LengthMismatchError(f"Lengths differ: {lam_arr.size} vs {eta_arr.size}")

    for name, values in (("lam", lam_arr), ("eta", eta_arr)):
        total = float(np.sum(values))
        if abs(total - 1.0) > tol:
            raise NotNormalizedError(f"{name} sums to {total:.12g}, expected 1")

    lam_partial = np.cumsum(np.sort(lam_arr)[::-1])
    eta_partial = np.cumsum(np.sort(eta_arr)[::-1])
    return bool(np.all(eta_partial >= lam_partial - tol))
