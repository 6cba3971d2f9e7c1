"""
Command-Line Interface

``qbcap evolve | table1 | sweep-detuning | noise-sweep | verify``

Exit status: 0 when every check passes, 1 when a relation or comparison
fails, 2 on invalid configuration or unwritable output.
"""

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Optional

from qbcap import __version__
from qbcap.config import GridConfig, QBCapConfig, RunConfig, get_config
from qbcap.exceptions import ConfigurationError, QBCapError, UnknownRelationError
from qbcap.logging_config import configure_logging, get_logger, setup_logger
from qbcap.model.hamiltonian import HamiltonianParams
from qbcap.pipeline.pipeline import DEFAULT_DELTAS, BatteryAnalysisPipeline, write_csv
from qbcap.relations.catalog import DEFAULT_TOL
from qbcap.relations.report import format_report, write_sidecar

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

logger = get_logger("qbcap.cli")

# Model constants used when a flag is not given
DEFAULT_PARAMS = {"omega_b": 1.0, "omega_c": 1.0, "j1": 0.1, "j2": 0.1}
COMMAND_PARAMS = {"sweep-detuning": {"omega_b": 1.0, "omega_c": 1.0, "j1": 1.0, "j2": 1.0}}

DEFAULT_OUTPUTS = {
    "evolve": "evolve.csv",
    "table1": None,
    "sweep-detuning": "sweep",
    "noise-sweep": "noise_sweep.csv",
    "verify": "verify.json",
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    model = common.add_argument_group("model")
    model.add_argument("--omega-b", type=float, help="battery field ω_b")
    model.add_argument("--omega-c", type=float, help="charger field ω_c")
    model.add_argument("--j1", type=float, help="flip-flop coupling J₁")
    model.add_argument("--j2", type=float, help="Ising coupling J₂")
    sampling = common.add_argument_group("sampling")
    sampling.add_argument("--t-max", type=float, default=50.0, help="final time (default: 50)")
    sampling.add_argument("--steps", type=int, default=1000, help="samples incl. t = 0 (default: 1000)")
    sampling.add_argument("--seed", type=int, default=42, help="random seed (default: 42)")
    common.add_argument("--out", type=Path, help="output file (or prefix for sweep-detuning)")
    common.add_argument("--config", type=Path, help="YAML configuration file")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        help="logging level (default: the configuration's, WARNING)",
    )
    common.add_argument("--progress", action="store_true", help="show progress bars")

    parser = argparse.ArgumentParser(
        prog="qbcap", description="Two-qubit quantum battery capacity laboratory"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    evolve = commands.add_parser("evolve", parents=[common], help="export a capacity/resource trajectory")
    evolve.add_argument("--gamma", type=float, help="dephase the state with this probability")

    commands.add_parser("table1", parents=[common], help="reference-table comparison")

    sweep = commands.add_parser(
        "sweep-detuning", parents=[common], help="capacity series for ω_c = ω_b + Δ"
    )
    sweep.add_argument(
        "--deltas", type=float, nargs="+", default=list(DEFAULT_DELTAS), help="detunings Δ"
    )

    noise = commands.add_parser("noise-sweep", parents=[common], help="resources under dephasing")
    noise.add_argument(
        "--gamma",
        type=float,
        nargs="+",
        default=list(GridConfig().gammas),
        help="dephasing probabilities",
    )

    verify = commands.add_parser("verify", parents=[common], help="run the relation catalog")
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL, help="tolerance (default: 1e-9)")
    verify.add_argument("--relations", nargs="+", help="subset of relation names")

    return parser


def _run_config(args: argparse.Namespace, gamma: Optional[float] = None) -> RunConfig:
    defaults: Dict[str, float] = {**DEFAULT_PARAMS, **COMMAND_PARAMS.get(args.command, {})}
    values = {
        name: getattr(args, name) if getattr(args, name) is not None else default
        for name, default in defaults.items()
    }
    out = args.out if args.out is not None else DEFAULT_OUTPUTS[args.command]
    return RunConfig(
        params=HamiltonianParams(**values),
        t_max=args.t_max,
        steps=args.steps,
        gamma=gamma,
        seed=args.seed,
        output_path=Path(out) if out is not None else Path("."),
    )


def cmd_evolve(args: argparse.Namespace, pipeline: BatteryAnalysisPipeline) -> int:
    run = _run_config(args, gamma=args.gamma)
    frame = pipeline.evolve(run)
    path = write_csv(frame, run.output_path)
    print(f"Wrote {len(frame)} rows to {path}")
    return EXIT_OK


def cmd_table1(args: argparse.Namespace, pipeline: BatteryAnalysisPipeline) -> int:
    table = pipeline.table1()
    print(f"{'t':>8} {'listed':>8} {'analytical':>12} {'t_sample':>10} {'integrated':>12}  status")
    for row in table.to_dict("records"):
        status = "PASS" if row["pass"] else "FAIL"
        print(
            f"{row['t']:>8.3f} {row['printed']:>8.4f} {row['analytical']:>12.6f} "
            f"{row['t_sample']:>10.5f} {row['integrated']:>12.6f}  {status}"
        )
    if args.out is not None:
        write_csv(table, args.out)
    return EXIT_OK if table["pass"].all() else EXIT_FAILED


def cmd_sweep_detuning(args: argparse.Namespace, pipeline: BatteryAnalysisPipeline) -> int:
    run = _run_config(args)
    series, summary = pipeline.sweep_detuning(args.deltas, run)

    prefix = run.output_path
    for delta, frame in series.items():
        write_csv(frame, prefix.with_name(f"{prefix.name}_delta{delta:g}.csv"))

    confirmed = True
    for row in summary.to_dict("records"):
        line = f"delta={row['delta']:g} max_capacity={row['max_capacity']:.10f}"
        if "peak_capacity" in row:
            expected = row["delta"] == 0
            ok = row["reaches_ceiling"] == expected
            confirmed &= ok
            line += (
                f" charging_max={row['charging_max']:.10f}"
                f" peak_capacity={row['peak_capacity']:.10f} at t={row['peak_time']:.6f}"
                f" ceiling={row['ceiling']:g} {'reached' if row['reaches_ceiling'] else 'below'}"
            )
        print(line)
    return EXIT_OK if confirmed else EXIT_FAILED


def cmd_noise_sweep(args: argparse.Namespace, pipeline: BatteryAnalysisPipeline) -> int:
    run = _run_config(args)
    frame = pipeline.noise_sweep(args.gamma, run)
    path = write_csv(frame, run.output_path)
    print(f"Wrote {len(frame)} rows for {len(args.gamma)} dephasing values to {path}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, pipeline: BatteryAnalysisPipeline) -> int:
    if not args.tol > 0:
        raise ConfigurationError(f"tol must be positive, got {args.tol}")

    grid, verdicts = pipeline.verify(args.seed, args.tol, relations=args.relations)
    sys.stdout.write(format_report(verdicts, grid, args.tol))

    out = args.out if args.out is not None else Path(DEFAULT_OUTPUTS["verify"])
    write_sidecar(
        verdicts,
        out,
        metadata={
            "seed": grid.seed,
            "tolerance": args.tol,
            "points": len(grid.params()),
            "n_times": grid.axes.n_times,
            "t_max": grid.axes.t_max,
        },
    )
    return EXIT_OK if all(verdict.passed for verdict in verdicts) else EXIT_FAILED


COMMANDS = {
    "evolve": cmd_evolve,
    "table1": cmd_table1,
    "sweep-detuning": cmd_sweep_detuning,
    "noise-sweep": cmd_noise_sweep,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the ``qbcap`` console script.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name (default: ``sys.argv[1:]``)

    Returns
    -------
    int
        Exit status
    """
    args = _build_parser().parse_args(argv)
    setup_logger("qbcap", level=args.log_level or "WARNING")

    try:
        config = QBCapConfig.load_from_yaml(args.config) if args.config else get_config()
        configure_logging(config.logging, level=args.log_level)
        pipeline = BatteryAnalysisPipeline(config, show_progress=args.progress)
        return COMMANDS[args.command](args, pipeline)
    except (ConfigurationError, UnknownRelationError, OSError) as exc:
        logger.error(str(exc))
        print(f"qbcap: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except QBCapError as exc:
        logger.error(str(exc))
        print(f"qbcap: error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
