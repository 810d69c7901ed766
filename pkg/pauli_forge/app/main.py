"""
Command-line entry point.

    pauli-forge named-map --name depolarizing --p 1
    pauli-forge synth --k k.json --out circuit.json
    pauli-forge scan --config configs/scan.json --out results.csv

Exit codes: 0 success, 2 invalid input or usage, 1 runtime failure. Results go
to stdout (JSON with ``--json``); logs go to stderr.
"""

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from pydantic import ValidationError

from pauli_forge import __version__
from pauli_forge.app.bootstrap import bootstrap
from pauli_forge.app.schemas import ChannelFile, CircuitFile, CurveFile, DensityFile, load_model, read_json
from pauli_forge.channels import DynamicalMap, PauliChannel, named_map
from pauli_forge.channels.named_maps import NAMED_MAPS
from pauli_forge.circuits import NoiseModel, export_qasm, simulate_channel, synthesize_channel_circuit
from pauli_forge.distance import diamond_fidelity
from pauli_forge.onepr import decomposition_residual, fit_dynamical_map, fit_onepr, random_onepr_map
from pauli_forge.pauli_algebra import k_to_tau
from pauli_forge.shared.config import Settings, get_settings
from pauli_forge.shared.errors import DomainError, NotAChannel, PauliForgeError, QasmParseError
from pauli_forge.tomography import ScanConfig, run_scan, write_scan_csv

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

Outcome = Tuple[Dict[str, Any], str]
Handler = Callable[[argparse.Namespace, Settings], Outcome]

_VALIDATION_ERRORS = (
    ValidationError,
    DomainError,
    NotAChannel,
    QasmParseError,
    FileNotFoundError,
    json.JSONDecodeError,
)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _fmt_list(values: Sequence[float]) -> str:
    return "[" + ", ".join(_fmt(float(v)) for v in values) + "]"


def _write(path: Optional[str], text: str) -> Optional[str]:
    if path is None:
        return None
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)
    return str(target)


def cmd_named_map(args: argparse.Namespace, settings: Settings) -> Outcome:
    k = named_map(args.name, args.p)
    tau = k_to_tau(k)
    payload = {"name": args.name, "p": args.p, "k": k.to_json(), "tau": tau.to_json()}
    return payload, f"k = {_fmt_list(k.k)}\ntau = {_fmt_list(tau.tau)}"


def cmd_synth(args: argparse.Namespace, settings: Settings) -> Outcome:
    k = load_model(args.k, ChannelFile).to_domain()
    circuit = synthesize_channel_circuit(k, k.n_qubits)
    out = _write(args.out, circuit.to_json())
    qasm = _write(args.qasm, export_qasm(circuit)) if args.qasm else None
    payload = {
        "n_qubits": circuit.n_qubits,
        "gates": len(circuit),
        "counts": circuit.depth_count(),
        "out": out,
        "qasm": qasm,
    }
    if out is None:
        payload["circuit"] = circuit.to_dict()
        return payload, circuit.to_json()
    return payload, f"{len(circuit)} gates on {circuit.n_qubits} qubits -> {out}"


def cmd_export_qasm(args: argparse.Namespace, settings: Settings) -> Outcome:
    circuit = load_model(args.circuit, CircuitFile).to_domain()
    text = export_qasm(circuit)
    out = _write(args.out, text)
    if out is None:
        return {"qasm": text}, text.rstrip("\n")
    return {"out": out}, f"OpenQASM written to {out}"


def cmd_simulate(args: argparse.Namespace, settings: Settings) -> Outcome:
    circuit = load_model(args.circuit, CircuitFile).to_domain()
    rho = load_model(args.rho, DensityFile).to_domain()
    noise = NoiseModel.model_validate(read_json(args.noise)) if args.noise else None
    out = simulate_channel(circuit, rho, noise)
    payload = out.to_dict()
    text = np.array2string(out.matrix, precision=12, suppress_small=True)
    return payload, f"rho =\n{text}"


def cmd_fidelity(args: argparse.Namespace, settings: Settings) -> Outcome:
    k1 = load_model(args.k1, ChannelFile).to_domain()
    k2 = load_model(args.k2, ChannelFile).to_domain()
    if args.brute_force:
        f = diamond_fidelity(
            PauliChannel(k1).evaluate,
            PauliChannel(k2).evaluate,
            restarts=args.restarts or settings.diamond.restarts,
            seed=args.seed,
            min_restarts=settings.diamond.min_restarts,
            agreement=settings.diamond.agreement,
        )
    else:
        f = diamond_fidelity(k1, k2)
    return {"f": f, "distance": 2 * (1 - f), "brute_force": args.brute_force}, f"f = {_fmt(f)}"


def cmd_scan(args: argparse.Namespace, settings: Settings) -> Outcome:
    config = ScanConfig.from_file(args.config)
    defaults = {
        "jobs": settings.scan.jobs,
        "diamond_restarts": settings.diamond.restarts,
        "diamond_min_restarts": settings.diamond.min_restarts,
        "diamond_agreement": settings.diamond.agreement,
    }
    overrides: Dict[str, Any] = {
        name: value for name, value in defaults.items() if name not in config.model_fields_set
    }
    if args.seed_given:
        overrides["seed"] = args.seed
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if overrides:
        config = config.model_copy(update=overrides)
    records = asyncio.run(run_scan(config))
    path = write_scan_csv(records, args.out)
    fidelities = [r.f for r in records]
    payload = {
        "records": len(records),
        "mean_f": float(np.mean(fidelities)) if fidelities else None,
        "min_f": float(np.min(fidelities)) if fidelities else None,
        "out": str(path),
    }
    summary = f"{len(records)} records -> {path}"
    if fidelities:
        summary += f"\nmean f = {_fmt(payload['mean_f'])}, min f = {_fmt(payload['min_f'])}"
    return payload, summary


def _report_points(domain: Tuple[float, float], requested: Optional[List[float]]) -> List[float]:
    if requested:
        return requested
    lo, hi = domain
    return [0.25] if lo <= 0.25 <= hi else [(lo + hi) / 2]


def cmd_onepr_fit(args: argparse.Namespace, settings: Settings) -> Outcome:
    options = {
        "restarts": settings.onepr.restarts,
        "max_iterations": settings.onepr.max_iterations,
        "improvement_tol": settings.onepr.improvement_tol,
        "residual_tol": settings.onepr.residual_tol,
    }
    if args.curve:
        curve = load_model(args.curve, CurveFile).to_domain()
        decomposition = fit_onepr(curve, seed=args.seed, **options)
    else:
        data = read_json(args.map)
        dynamical_map = DynamicalMap.from_dict(data.get("map", data))
        decomposition, curve = fit_dynamical_map(
            dynamical_map, args.samples, gauge_search=args.gauge_search, seed=args.seed, **options
        )
    residual = decomposition_residual(decomposition, curve)
    schedule = [
        {"p": p, "s": decomposition.s(p), "sin_s": float(np.sin(decomposition.s(p)))}
        for p in _report_points(decomposition.domain, args.at)
    ]
    payload = {
        "residual": residual,
        "norms_squared": list(decomposition.norms_squared),
        "schedule": schedule,
        "decomposition": decomposition.to_dict(),
    }
    _write(args.out, json.dumps(decomposition.to_dict(), indent=2))
    lines = [f"residual = {residual:.3e}", f"|a|^2, |b|^2, |c|^2 = {_fmt_list(decomposition.norms_squared)}"]
    lines += [f"s({_fmt(row['p'])}) = {_fmt(row['s'])}, sin s = {_fmt(row['sin_s'])}" for row in schedule]
    return payload, "\n".join(lines)


def cmd_onepr_random(args: argparse.Namespace, settings: Settings) -> Outcome:
    decomposition, dynamical_map = random_onepr_map(args.seed, n_samples=args.samples)
    document = {
        "seed": args.seed,
        "decomposition": decomposition.to_dict(),
        "map": dynamical_map.to_dict(args.samples),
    }
    out = _write(args.out, json.dumps(document, indent=2))
    payload = dict(document, out=out)
    text = f"|a|^2, |b|^2, |c|^2 = {_fmt_list(decomposition.norms_squared)}"
    if out:
        text += f"\nmap with {args.samples} samples -> {out}"
    return payload, text


COMMANDS: Dict[str, Handler] = {
    "synth": cmd_synth,
    "simulate": cmd_simulate,
    "fidelity": cmd_fidelity,
    "scan": cmd_scan,
    "onepr-fit": cmd_onepr_fit,
    "onepr-random": cmd_onepr_random,
    "export-qasm": cmd_export_qasm,
    "named-map": cmd_named_map,
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    common.add_argument("--seed", type=int, default=None, help=f"Seed (default {settings.seed})")

    parser = argparse.ArgumentParser(prog="pauli-forge", description="Pauli channels and 1PR circuits")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=["debug", "info", "warning", "error"], default=None)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("synth", parents=[common], help="Circuit implementing a Pauli channel")
    p.add_argument("--k", required=True, help="Channel JSON")
    p.add_argument("--out", help="Circuit JSON output (stdout if omitted)")
    p.add_argument("--qasm", help="Also write OpenQASM 2.0 here")

    p = sub.add_parser("simulate", parents=[common], help="Run a circuit on a main-register state")
    p.add_argument("--circuit", required=True)
    p.add_argument("--rho", required=True, help="Density JSON for the main qubits")
    p.add_argument("--noise", help="Noise JSON {lambda_1q, lambda_2q, epsilon}")

    p = sub.add_parser("fidelity", parents=[common], help="Diamond fidelity of two Pauli channels")
    p.add_argument("--k1", required=True)
    p.add_argument("--k2", required=True)
    p.add_argument("--brute-force", action="store_true", help="Use the variational oracle (one qubit)")
    p.add_argument("--restarts", type=int, default=None)

    p = sub.add_parser("scan", parents=[common], help="Tetrahedron fidelity scan")
    p.add_argument("--config", required=True, help="Scan config (JSON or YAML)")
    p.add_argument("--out", required=True, help="CSV output")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("onepr-fit", parents=[common], help="Fit a 1PR decomposition")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--curve", help="StateCurve JSON")
    source.add_argument("--map", help="Sampled dynamical map JSON (e.g. onepr-random output)")
    p.add_argument("--samples", type=int, default=101, help="Samples when lifting --map")
    p.add_argument("--gauge-search", action="store_true", help="Search constant phases when lifting --map")
    p.add_argument("--at", type=float, action="append", help="Report s(P) and sin s(P); repeatable")
    p.add_argument("--out", help="Decomposition JSON output")

    p = sub.add_parser("onepr-random", parents=[common], help="Random 1PR-feasible dynamical map")
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--out", help="Map JSON output")

    p = sub.add_parser("export-qasm", parents=[common], help="Circuit JSON to OpenQASM 2.0")
    p.add_argument("--circuit", required=True)
    p.add_argument("--out", help="QASM output (stdout if omitted)")

    p = sub.add_parser("named-map", parents=[common], help="k(p) of a named dynamical map")
    p.add_argument("--name", required=True, choices=sorted(NAMED_MAPS))
    p.add_argument("--p", type=float, required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    """Parse ``argv``, execute the command and return its exit code."""
    settings = settings or get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    bootstrap(settings, args.log_level)
    args.seed_given = args.seed is not None
    if args.seed is None:
        args.seed = settings.seed
    log = logger.bind(command=args.command, seed=args.seed)

    try:
        payload, text = COMMANDS[args.command](args, settings)
    except _VALIDATION_ERRORS as exc:
        log.error("invalid_input", error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PauliForgeError as exc:
        log.error("command_failed", error=str(exc), kind=type(exc).__name__)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:
        log.exception("command_crashed")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME

    print(json.dumps(payload, indent=2, default=str) if args.json else text)
    log.info("command_completed")
    return EXIT_OK


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
