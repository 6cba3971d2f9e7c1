"""Relation catalog, verification grid and verdict reports."""

from qbcap.relations.catalog import (
    DEFAULT_TOL,
    RELATION_CHECKS,
    TABLE1_ROWS,
    GridEvaluation,
    charging_peak,
    table1_comparison,
    verify,
    verify_all,
)
from qbcap.relations.grid import ParameterGrid
from qbcap.relations.report import format_report, format_verdict, write_sidecar

__all__ = [
    "ParameterGrid",
    "GridEvaluation",
    "RELATION_CHECKS",
    "DEFAULT_TOL",
    "TABLE1_ROWS",
    "verify",
    "verify_all",
    "table1_comparison",
    "charging_peak",
    "format_report",
    "format_verdict",
    "write_sidecar",
]
