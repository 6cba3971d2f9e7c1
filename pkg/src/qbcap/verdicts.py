"""
Relation Identifiers and Verdicts

Named relations between capacity and resource measures, and the verdict
produced when one is checked numerically.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from qbcap.exceptions import UnknownRelationError


class RelationId(str, Enum):
    """Catalog of verified relations."""

    THM1_ENTANGLEMENT = "thm1_entanglement"
    THM2_SUBADDITIVITY = "thm2_subadditivity"
    THM3_RESIDUAL = "thm3_residual"
    THM4_CONSERVATION = "thm4_conservation"
    THM5_STEERING = "thm5_steering"
    THM6_BELL = "thm6_bell"
    THM7_COHERENCE = "thm7_coherence"
    THM8_IMAGINARITY = "thm8_imaginarity"
    THM9_TEXTURE = "thm9_texture"
    THM10_TEXTURE_RESIDUAL = "thm10_texture_residual"
    XID_STEERING_OF_E = "xid_steering_of_E"
    XID_BELL_OF_E = "xid_bell_of_E"
    XID_COHERENCE_EQ_E = "xid_coherence_eq_E"
    XID_IMAG_DECOMP = "xid_imag_decomp"
    XID_TEXTURE_FAMILY = "xid_texture_family"
    TBL1_CROSSCHECK = "tbl1_crosscheck"
    APPB_FAMILY = "appB_family"

    @classmethod
    def parse(cls, value: Any) -> "RelationId":
        """Accept a RelationId or its string name."""
        try:
            return value if isinstance(value, cls) else cls(value)
        except ValueError:
            raise UnknownRelationError(f"Unknown relation: {value!r}") from None


# (params as (ω_b, ω_c, J₁, J₂), t, γ)
Location = Tuple[Optional[Tuple[float, float, float, float]], Optional[float], Optional[float]]


@dataclass(frozen=True)
class RelationVerdict:
    """
    Outcome of checking one relation over a set of samples.

    ``max_residual`` is the largest |lhs − rhs| (for inequalities, the
    largest violation) and ``worst_case`` its (params, t, gamma) location.
    """

    relation: RelationId
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    worst_case: Location = (None, None, None)
    label: str = ""
    notes: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def name(self) -> str:
        return f"{self.relation.value}:{self.label}" if self.label else self.relation.value

    def to_record(self) -> Dict[str, Any]:
        params, t, gamma = self.worst_case
        return {
            "name": self.name,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "worst_params": list(params) if params is not None else None,
            "worst_t": t,
            "worst_gamma": gamma,
            "notes": dict(self.notes),
        }


class ResidualTracker:
    """Running maximum of residuals and the location where it occurred."""

    def __init__(self):
        self.samples = 0
        self.max_residual = 0.0
        self.worst_case: Location = (None, None, None)
        self._located = False

    def update(self, residuals, params=None, times=None, gamma=None) -> None:
        """
        Fold in residuals measured at ``times`` (array or scalar).

        NaN residuals count as infinitely bad.
        """
        values = np.atleast_1d(np.asarray(residuals, dtype=float))
        if values.size == 0:
            return

        values = np.where(np.isnan(values), math.inf, values)
        self.samples += int(values.size)
        index = int(np.argmax(values))
        if self._located and values[index] <= self.max_residual:
            return

        t = None
        if times is not None:
            t = float(np.broadcast_to(np.asarray(times, dtype=float), values.shape)[index])
        self.max_residual = float(values[index])
        self.worst_case = (
            params.as_tuple() if params is not None else None,
            t,
            None if gamma is None else float(gamma),
        )
        self._located = True

    def merge(self, other: "ResidualTracker") -> None:
        self.samples += other.samples
        if other._located and (not self._located or other.max_residual > self.max_residual):
            self.max_residual = other.max_residual
            self.worst_case = other.worst_case
            self._located = True

    def verdict(
        self,
        relation: RelationId,
        tolerance: float,
        label: str = "",
        notes: Optional[Dict[str, float]] = None,
    ) -> RelationVerdict:
        return RelationVerdict(
            relation=relation,
            samples=self.samples,
            max_residual=self.max_residual,
            tolerance=tolerance,
            passed=self.max_residual <= tolerance,
            worst_case=self.worst_case,
            label=label,
            notes=dict(notes or {}),
        )
