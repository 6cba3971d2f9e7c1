"""Battery capacity, active/passive states and subadditivity checks."""

from qbcap.capacity.capacity import (
    CapacityReport,
    active_passive,
    capacity_report,
    capacity_from_spectra,
    capacity_spectral,
    capacity_unitary_orbit,
)
from qbcap.capacity.subadditivity import (
    SubadditivityResult,
    XState,
    dephase,
    random_x_state,
    schur_convexity_check,
    subadditivity_check,
)

__all__ = [
    "CapacityReport",
    "capacity_spectral",
    "capacity_from_spectra",
    "active_passive",
    "capacity_report",
    "capacity_unitary_orbit",
    "XState",
    "SubadditivityResult",
    "random_x_state",
    "dephase",
    "subadditivity_check",
    "schur_convexity_check",
]
