"""Quantum resource measures and majorization."""

from qbcap.resources.majorization import majorizes
from qbcap.resources.measures import (
    CorrelationMatrix,
    ResourceReport,
    bell_chsh,
    coherence_l1,
    concurrence,
    correlation_matrix,
    imaginarity_l1,
    measure_all,
    steering_f3,
    texture_free_state,
    texture_tr,
)

__all__ = [
    "CorrelationMatrix",
    "ResourceReport",
    "concurrence",
    "steering_f3",
    "bell_chsh",
    "coherence_l1",
    "imaginarity_l1",
    "texture_tr",
    "texture_free_state",
    "correlation_matrix",
    "measure_all",
    "majorizes",
]
