"""Command-line front end: gate verification, error sweeps, decoupling probes.

Subcommands:

    verify    run gate-correctness, leakage, commutant, and holonomy checks
    sweep     fidelity vs pulse-error CSV over a flip/detuning grid
    decouple  residual-error-vs-dt ladder with a fitted order

Options can come from a flat key=value config file (--config); explicit
flags win over file values. Exit codes: 0 all checks passed, 1 a check
failed, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .dfs import build_logical_basis, project_to_logical
from .errors import DfsGatesError
from .gates import (
    analytic_target,
    evolve_schedule,
    leakage_of,
    schedule_u1,
    schedule_u2,
    schedule_u3,
    u3_subspace_swap_defect,
    verify_holonomy,
)
from .linalg import phase_invariant_fidelity
from .noise import (
    BathModel,
    InterleavingPlan,
    bare_evolution_error,
    decoupling_order_probe,
    error_sweep,
    fit_error_order,
    sweep_csv_lines,
)
from .pauli import build_decoupling_group, commutes

DEFAULTS = {
    "n": 4,
    "gate": "u3",
    "j": 1,
    "k": 1,
    "l": 2,
    "angle": float(np.pi / 4),
    "cycles": 4,
    "eps_range": "-0.1:0.1",
    "delta_range": "-0.1:0.1",
    "step": 0.005,
    "bath": "none",
    "bath_width": 0.1,
    "seed": 0,
    "out": "sweep.csv",
    "samples": 8,
    "dt_ladder": "0.1,0.05,0.025",
    "total_time": 2.0,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfsgates",
        description="Holonomic gates in decoupling-protected subspaces: "
        "verification, pulse-error sweeps, decoupling-order probes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", type=str, help="key=value config file; flags win")
        p.add_argument("--n", type=int, help="physical qubits (even, >= 4)")
        p.add_argument("--gate", choices=("u1", "u2", "u3"), help="gate family")
        p.add_argument("--j", type=int, help="logical target for u1/u2")
        p.add_argument("--k", type=int, help="first logical target for u3")
        p.add_argument("--l", type=int, help="second logical target for u3")
        p.add_argument("--angle", type=float, help="gate angle theta or phi")
        p.add_argument("--cycles", type=int, help="XY-4 cycles per segment")
        p.add_argument("--bath", choices=("none", "scalar", "qubit"), help="bath model")
        p.add_argument("--bath-width", dest="bath_width", type=float,
                       help="half-width of the uniform coupling draw")
        p.add_argument("--seed", type=int, help="seed for bath draws")
        p.add_argument("--out", type=str, help="output path")

    p_verify = sub.add_parser("verify", help="check one gate end to end")
    common(p_verify)
    p_verify.add_argument("--samples", type=int, help="holonomy samples per segment")

    p_sweep = sub.add_parser("sweep", help="fidelity vs pulse error, CSV out")
    common(p_sweep)
    p_sweep.add_argument("--eps-range", dest="eps_range", type=str,
                         help="flip-angle range lo:hi")
    p_sweep.add_argument("--delta-range", dest="delta_range", type=str,
                         help="detuning range lo:hi")
    p_sweep.add_argument("--step", type=float, help="grid step")

    p_dec = sub.add_parser("decouple", help="decoupling-order probe over a dt ladder")
    common(p_dec)
    p_dec.add_argument("--dt-ladder", dest="dt_ladder", type=str,
                       help="comma-separated pulse spacings")
    p_dec.add_argument("--total-time", dest="total_time", type=float,
                       help="total idle evolution time")
    return parser


def _read_config(path: str) -> dict:
    values = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line: {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        values[key.replace("-", "_")] = val
    return values


def _resolve(args: argparse.Namespace) -> dict:
    """Merge defaults, config file, and flags (flags win)."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        file_values = _read_config(args.config)
        for key, val in file_values.items():
            if key not in DEFAULTS:
                raise ValueError(f"unknown config key {key!r}")
            merged[key] = type(DEFAULTS[key])(val)
    for key in merged:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
    return merged


def _parse_range(text: str) -> tuple[float, float]:
    lo, hi = (float(part) for part in text.split(":"))
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(round((hi - lo) / step))
    return [round(lo + i * step, 12) for i in range(count + 1)]


def _schedule(cfg: dict):
    if cfg["gate"] == "u1":
        return schedule_u1(cfg["n"], cfg["j"], cfg["angle"])
    if cfg["gate"] == "u2":
        return schedule_u2(cfg["n"], cfg["j"], cfg["angle"])
    return schedule_u3(cfg["n"], cfg["k"], cfg["l"], cfg["angle"])


def _bath(cfg: dict) -> BathModel:
    if cfg["bath"] == "none":
        return BathModel.zero(cfg["n"])
    kind = "scalar" if cfg["bath"] == "scalar" else "qubit"
    return BathModel.random(cfg["n"], cfg["bath_width"], cfg["seed"], kind=kind)


def cmd_verify(cfg: dict) -> int:
    schedule = _schedule(cfg)
    basis = build_logical_basis(cfg["n"])
    group = build_decoupling_group(cfg["n"])

    checks: list[tuple[str, float, str, float, bool]] = []
    gate = project_to_logical(evolve_schedule(schedule), basis)
    fid = phase_invariant_fidelity(gate, analytic_target(schedule))
    checks.append(("gate_fidelity", fid, ">=", 1 - 1e-9, fid >= 1 - 1e-9))
    leak = leakage_of(gate)
    checks.append(("leakage", leak, "<=", 1e-10, leak <= 1e-10))

    bad_terms = sum(
        0 if all(commutes(string, g) for g in group.elements) else 1
        for segment in schedule.segments
        for _, string in segment.hamiltonian.terms
    )
    checks.append(("commutant_membership", bad_terms, "==", 0, bad_terms == 0))

    report = verify_holonomy(schedule, basis, cfg["samples"])
    checks.append(("cyclic_defect", report.cyclic_defect, "<=", 1e-9,
                   report.cyclic_defect <= 1e-9))
    checks.append(("parallel_transport", report.max_parallel_transport_violation,
                   "<=", 1e-9, report.max_parallel_transport_violation <= 1e-9))
    if schedule.kind == "u3":
        swap = u3_subspace_swap_defect(schedule, basis)
        checks.append(("subspace_swap", swap, "<=", 1e-9, swap <= 1e-9))

    target = (f"j={cfg['j']}" if cfg["gate"] in ("u1", "u2")
              else f"k={cfg['k']} l={cfg['l']}")
    print(f"verify {cfg['gate']} n={cfg['n']} {target} angle={cfg['angle']:.6g}")
    all_ok = True
    for name, value, rel, bound, ok in checks:
        all_ok &= ok
        print(f"  {name:22s} {value:<12.3e} {rel} {bound:<8.0e} "
              f"{'PASS' if ok else 'FAIL'}")
    print("result: " + ("PASS" if all_ok else "FAIL"))
    return 0 if all_ok else 1


def cmd_sweep(cfg: dict) -> int:
    schedule = _schedule(cfg)
    basis = build_logical_basis(cfg["n"])
    plan = InterleavingPlan(cycles_per_segment=cfg["cycles"])
    bath = _bath(cfg)
    rows = []
    for kind, range_key in (("detuning", "delta_range"), ("flip", "eps_range")):
        lo, hi = _parse_range(cfg[range_key])
        rows += error_sweep(schedule, basis, plan, bath, kind, _grid(lo, hi, cfg["step"]))
    lines = sweep_csv_lines(rows, cfg["seed"], plan, schedule)
    out = Path(cfg["out"])
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} rows to {out}")
    return 0


def cmd_decouple(cfg: dict) -> int:
    if cfg["bath"] == "none":
        bath = BathModel.zero(cfg["n"])
    else:
        bath = _bath(cfg)
    dts = [float(part) for part in cfg["dt_ladder"].split(",")]
    points = decoupling_order_probe(bath, dts, cfg["total_time"])
    bare = bare_evolution_error(bath, cfg["total_time"])
    print(f"decouple n={cfg['n']} bath={cfg['bath']} seed={cfg['seed']} "
          f"total_time={cfg['total_time']:.6g}")
    for dt, err in points:
        print(f"  dt={dt:<8.6g} dd_error={err:.6e}  bare_error={bare:.6e}")
    if all(err <= 1e-10 for _, err in points):
        print("result: exact (errors at numerical floor)")
        return 0
    order = fit_error_order(points)
    dd_beats_bare = all(err < bare for _, err in points)
    ok = order >= 1.5 and dd_beats_bare
    print(f"fitted order: {order:.3f} (want >= 1.5); DD beats bare: {dd_beats_bare}")
    print("result: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve(args)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "sweep":
            return cmd_sweep(cfg)
        return cmd_decouple(cfg)
    except (DfsGatesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, (DfsGatesError, ValueError)) else 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
