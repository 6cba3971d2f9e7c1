"""Parallel processing utilities."""

from typing import Any, Callable, List, Optional, Sequence

from joblib import Parallel, delayed
from tqdm import tqdm

from qbcap.config import ParallelConfig


def parallel_map(
    func: Callable,
    items: Sequence[Any],
    n_jobs: int = 1,
    backend: str = "loky",
    desc: Optional[str] = None,
) -> List[Any]:
    """
    Apply ``func`` to every item with joblib, preserving order.

    Parameters
    ----------
    func : Callable
        Function to apply to each item (must be picklable for process backends)
    items : Sequence
        Items to process
    n_jobs : int
        Number of parallel jobs (-1 = all cores, 1 = run inline)
    backend : str
        Joblib backend
    desc : str, optional
        Show a tqdm progress bar with this description

    Returns
    -------
    List
        Results in the order of ``items``
    """
    iterable = tqdm(items, desc=desc, leave=False) if desc else items
    if n_jobs == 1:
        return [func(item) for item in iterable]
    return Parallel(n_jobs=n_jobs, backend=backend)(delayed(func)(item) for item in iterable)


class ParallelProcessor:
    """
    Parallel processor for grid evaluations.

    Parameters
    ----------
    n_jobs : int, default=1
        Number of parallel jobs. -1 means using all processors.
    backend : str, default='loky'
        Joblib backend ('loky', 'threading', 'multiprocessing').
    verbose : int, default=0
        Verbosity level.
    prefer : str, default='processes'
        Soft hint passed to joblib when the backend allows it.

    Examples
    --------
    >>> processor = ParallelProcessor(n_jobs=4)
    >>> results = processor.map(abs, [-1, -2, 3])
    """

    def __init__(
        self, n_jobs: int = 1, backend: str = "loky", verbose: int = 0, prefer: str = "processes"
    ):
        """Initialize parallel processor."""
        self.n_jobs = n_jobs
        self.backend = backend
        self.verbose = verbose
        self.prefer = prefer

    @classmethod
    def from_config(cls, config: ParallelConfig) -> "ParallelProcessor":
        return cls(
            n_jobs=config.n_jobs,
            backend=config.backend,
            verbose=config.verbose,
            prefer=config.prefer,
        )

    def map(self, func: Callable, items: Sequence[Any], desc: Optional[str] = None) -> List[Any]:
        """
        Apply function to items in parallel.

        Parameters
        ----------
        func : Callable
            Function to apply
        items : Sequence[Any]
            Items to process
        desc : str, optional
            Progress bar description; no bar when omitted

        Returns
        -------
        List[Any]
            Results
        """
        iterable = tqdm(items, desc=desc, leave=False) if desc else items
        if self.n_jobs == 1:
            return [func(item) for item in iterable]
        return Parallel(
            n_jobs=self.n_jobs, backend=self.backend, verbose=self.verbose, prefer=self.prefer
        )(delayed(func)(item) for item in iterable)
