"""Utility functions and helpers."""

from qbcap.utils.parallel import ParallelProcessor, parallel_map

__all__ = ["parallel_map", "ParallelProcessor"]
