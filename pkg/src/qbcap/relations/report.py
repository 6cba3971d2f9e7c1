"""
Verification Reports

Plain-text report (one relation per line) and the JSON sidecar with one
record per relation.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from qbcap.relations.grid import ParameterGrid
from qbcap.verdicts import RelationVerdict


def format_verdict(verdict: RelationVerdict) -> str:
    """
    One report line: name, samples, max_residual, tolerance, PASS/FAIL.

    Failed lines end with the worst-case location.
    """
    status = "PASS" if verdict.passed else "FAIL"
    line = (
        f"{verdict.name:<24} samples={verdict.samples:<7d} "
        f"max_residual={verdict.max_residual:.3e} tolerance={verdict.tolerance:.1e} {status}"
    )
    if not verdict.passed:
        params, t, gamma = verdict.worst_case
        line += f" worst: params={params} t={t} gamma={gamma}"
    return line


def report_header(grid: ParameterGrid, tol: float) -> List[str]:
    axes = grid.axes
    spacing = axes.t_max / (axes.n_times - 1)
    return [
        f"# qbcap verification: seed={grid.seed} tol={tol:.1e} points={len(grid.params())}",
        f"# times: {axes.n_times} uniform samples over [0, {axes.t_max:g}], "
        f"t_i = i*{axes.t_max:g}/{axes.n_times - 1} (spacing {spacing:.6g})",
    ]


def format_report(
    verdicts: Sequence[RelationVerdict], grid: Optional[ParameterGrid] = None, tol: float = 0.0
) -> str:
    """Full text report, header first when a grid is given."""
    lines = report_header(grid, tol) if grid is not None else []
    lines.extend(format_verdict(verdict) for verdict in verdicts)
    passed = sum(verdict.passed for verdict in verdicts)
    lines.append(f"# {passed}/{len(verdicts)} relations passed")
    return "\n".join(lines) + "\n"


def sidecar_records(verdicts: Sequence[RelationVerdict]) -> List[Dict[str, Any]]:
    return [verdict.to_record() for verdict in verdicts]


def write_sidecar(
    verdicts: Sequence[RelationVerdict], filepath: Path, metadata: Optional[Dict[str, Any]] = None
) -> Path:
    """
    Write the structured verdict file.

    Parameters
    ----------
    verdicts : sequence of RelationVerdict
        Verdicts to record
    filepath : Path
        Destination (.json)
    metadata : dict, optional
        Run settings stored next to the records (seed, tolerance, ...)

    Returns
    -------
    Path
        The written file
    """
    filepath = Path(filepath)
    payload = {"metadata": dict(metadata or {}), "relations": sidecar_records(verdicts)}
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        json.dump(payload, f, indent=2)
        f.write("\n")
    return filepath
