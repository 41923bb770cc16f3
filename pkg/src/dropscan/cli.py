"""Command-line front end: run experiments, write reports and plot-ready CSVs.

Exit codes: 0 success, 2 configuration error, 3 numerical-invariant
violation. All outputs are deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import numpy as np

from .circuits import run_statevector, serialize_circuit
from .drops import basis_droplet, basis_words
from .qcore import density_from_state, is_unitary
from .sampling import parse_grid_spec
from .tomography import (
    TomographyReport,
    builtin_preparations,
    builtin_process_targets,
    droplet_records,
    inject_error,
    process_fidelity,
    process_tomography,
    reconstruct_density,
    reconstruct_process,
    report_to_json,
    sampling_study,
    state_fidelity,
    state_tomography,
    validate_report,
)

CONFIG_ERROR = 2
INVARIANT_ERROR = 3

_DEFAULTS = {
    "grid": "equiangular:M=7",
    "shots": "8192",
    "seed": 7,
    "out": "out",
    "repeats": 100,
}


class CliError(click.ClickException):
    exit_code = CONFIG_ERROR


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config {path}: {exc}")
    if not isinstance(cfg, dict):
        raise CliError(f"config {path} must hold a JSON object")
    return cfg


def _resolve(option, flag_value, cfg, default):
    """Precedence: explicit flag > config file > default."""
    if flag_value is not None:
        return flag_value
    if option in cfg:
        return cfg[option]
    return default


def _parse_shots(text) -> int | None:
    text = str(text).strip().lower()
    if text == "ideal":
        return None
    try:
        shots = int(text)
    except ValueError:
        raise CliError(f"shots must be a positive integer or 'ideal', got {text!r}")
    if shots < 1:
        raise CliError("shots must be >= 1")
    return shots


def _parse_grid(spec: str):
    try:
        return parse_grid_spec(str(spec))
    except (ValueError, OSError) as exc:
        raise CliError(f"bad grid spec {spec!r}: {exc}")


def _parse_injections(specs) -> list[tuple[int, tuple[float, float, float]]]:
    out = []
    for spec in specs:
        try:
            qubit_part, angles_part = spec.split(":", 1)
            qubit = int(qubit_part.lstrip("q"))
            angles = tuple(float(t) for t in angles_part.split(","))
            if len(angles) != 3:
                raise ValueError("need three angles")
        except ValueError as exc:
            raise CliError(f"bad --inject-error {spec!r} "
                           f"(expected q<i>:theta,phi,lambda): {exc}")
        out.append((qubit, angles))
    return out


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def write_droplet_csv(path: Path, ds) -> None:
    lines = ["label,rank,beta,alpha,re,im,abs,arg"]
    for rec in droplet_records(ds):
        label, rank = rec[0], rec[1]
        lines.append(f"{label},{rank}," + ",".join(repr(v) for v in rec[2:]))
    _write(path, "\n".join(lines) + "\n")


def read_droplet_csv(path: Path):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "label,rank,beta,alpha,re,im,abs,arg":
            raise ValueError(f"unexpected droplet CSV header {header!r}")
        for line in fh:
            if not line.strip():
                continue
            label, rank, *numbers = line.strip().split(",")
            rows.append((label, int(rank), *(float(v) for v in numbers)))
    return rows


def write_study_csv(path: Path, rows) -> None:
    lines = ["scheme,n_points,shots_per_point,n_total,mean_fidelity,std_fidelity"]
    for r in rows:
        lines.append(f"{r.scheme},{r.n_points},{r.shots_per_point},{r.n_total},"
                     f"{r.mean_fidelity!r},{r.std_fidelity!r}")
    _write(path, "\n".join(lines) + "\n")


def read_study_csv(path: Path):
    from .tomography import StudyRow
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "scheme,n_points,shots_per_point,n_total,mean_fidelity,std_fidelity":
            raise ValueError(f"unexpected study CSV header {header!r}")
        for line in fh:
            if not line.strip():
                continue
            scheme, np_, spp, ntot, mean, std = line.strip().split(",")
            rows.append(StudyRow(scheme, int(np_), int(spp), int(ntot),
                                 float(mean), float(std)))
    return rows


def _common_options(fn):
    fn = click.option("--config", type=click.Path(exists=True), default=None,
                      help="JSON config file; flags override its entries.")(fn)
    fn = click.option("--grid", "grid_spec", default=None,
                      help="equiangular:M=<n>, file:<path>, lebedev110, "
                           "or gauss-legendre:<p>x<a>.")(fn)
    fn = click.option("--shots", default=None,
                      help="Shots per grid point, or 'ideal'.")(fn)
    fn = click.option("--seed", type=int, default=None, help="Master seed.")(fn)
    fn = click.option("--out", "out_dir", default=None, help="Output directory.")(fn)
    return fn


@click.group()
def main() -> None:
    """Scanning Wigner tomography of qubit states and single-qubit processes."""


@main.command("state-tomo")
@_common_options
@click.option("--prep", default=None,
              help="Builtin preparation name: " + ", ".join(builtin_preparations()))
@click.option("--inject-error", "injections", multiple=True,
              help="Extra rotation q<i>:theta,phi,lambda appended to the "
                   "preparation (repeatable).")
def cmd_state_tomo(config, grid_spec, shots, seed, out_dir, prep, injections):
    """Tomograph a prepared state; write report.json and droplets.csv."""
    cfg = _load_config(config)
    grid = _parse_grid(_resolve("grid", grid_spec, cfg, _DEFAULTS["grid"]))
    nshots = _parse_shots(_resolve("shots", shots, cfg, _DEFAULTS["shots"]))
    master_seed = int(_resolve("seed", seed, cfg, _DEFAULTS["seed"]))
    out = Path(_resolve("out", out_dir, cfg, _DEFAULTS["out"]))
    prep_name = _resolve("prep", prep, cfg, None)
    injections = list(injections) or list(cfg.get("inject_errors", []))

    preps = builtin_preparations()
    if prep_name not in preps:
        raise CliError(f"unknown prep {prep_name!r}; choose from "
                       f"{', '.join(sorted(preps))}")
    circuit = preps[prep_name]
    target = density_from_state(run_statevector(circuit))
    injected = _parse_injections(injections)
    if injected:
        for qubit, _ in injected:
            if qubit >= circuit.width:
                raise CliError(f"--inject-error qubit q{qubit} exceeds width "
                               f"{circuit.width}")
        circuit = inject_error(circuit, injected)

    ds = state_tomography(circuit, grid, nshots, master_seed)
    rho, coeff = reconstruct_density(ds)
    fid = state_fidelity(rho, target)
    report = TomographyReport(
        ds, rho, coeff, fid, target=f"state:{prep_name}",
        injected_errors=tuple(f"q{q}:{t},{p},{l}" for q, (t, p, l) in injected))
    try:
        validate_report(report)
    except ValueError as exc:
        click.echo(f"invariant violation: {exc}", err=True)
        sys.exit(INVARIANT_ERROR)
    _write(out / "report.json", report_to_json(report))
    write_droplet_csv(out / "droplets.csv", ds)
    _write(out / "circuit.txt", serialize_circuit(circuit))
    click.echo(f"state-tomo prep={prep_name} grid={grid.scheme} "
               f"shots={nshots or 'ideal'} fidelity={fid:.6f}")


@main.command("process-tomo")
@_common_options
@click.option("--target", "target_name", default=None,
              help="Builtin target (h, x, ry-3pi2) or inline JSON matrix "
                   "[[re,im,...],...].")
def cmd_process_tomo(config, grid_spec, shots, seed, out_dir, target_name):
    """Tomograph a known single-qubit unitary; write report.json and droplets.csv."""
    cfg = _load_config(config)
    grid = _parse_grid(_resolve("grid", grid_spec, cfg, _DEFAULTS["grid"]))
    nshots = _parse_shots(_resolve("shots", shots, cfg, _DEFAULTS["shots"]))
    master_seed = int(_resolve("seed", seed, cfg, _DEFAULTS["seed"]))
    out = Path(_resolve("out", out_dir, cfg, _DEFAULTS["out"]))
    name = _resolve("target", target_name, cfg, None)

    targets = builtin_process_targets()
    if name in targets:
        u = targets[name]
    elif name is None:
        raise CliError("missing --target")
    else:
        try:
            entries = np.array(json.loads(name), dtype=float)
            u = entries[..., 0] + 1j * entries[..., 1] if entries.ndim == 3 \
                else entries.astype(complex)
        except (json.JSONDecodeError, ValueError, IndexError) as exc:
            raise CliError(f"target {name!r} is neither a builtin nor an "
                           f"inline matrix: {exc}")
        if u.shape != (2, 2):
            raise CliError(f"inline target must be 2x2, got {u.shape}")
        if not is_unitary(u):
            raise CliError("inline target matrix is not unitary")

    ds = process_tomography(u, grid, nshots, master_seed)
    u_hat, coeff = reconstruct_process(ds)
    fid = process_fidelity(u_hat, u)
    report = TomographyReport(ds, u_hat, coeff, fid, target=f"process:{name}")
    try:
        validate_report(report)
    except ValueError as exc:
        click.echo(f"invariant violation: {exc}", err=True)
        sys.exit(INVARIANT_ERROR)
    _write(out / "report.json", report_to_json(report))
    write_droplet_csv(out / "droplets.csv", ds)
    click.echo(f"process-tomo target={name} grid={grid.scheme} "
               f"shots={nshots or 'ideal'} fidelity={fid:.6f}")


@main.command("sampling-study")
@_common_options
@click.option("--state", "state_name", default=None,
              help="Builtin single-qubit state (default: study).")
@click.option("--budgets", default=None,
              help="Comma-separated total shot budgets (>= 2 values).")
@click.option("--repeats", type=int, default=None,
              help="Tomography repetitions per (scheme, budget).")
@click.option("--grid", "grid_specs", multiple=True,
              help="Sampling scheme (repeatable).")
def cmd_sampling_study(config, grid_spec, shots, seed, out_dir, state_name,
                       budgets, repeats, grid_specs):
    """Compare sampling schemes at equal total shot budgets; write study.csv."""
    cfg = _load_config(config)
    del grid_spec, shots  # study uses --budgets and repeated --grid flags
    master_seed = int(_resolve("seed", seed, cfg, _DEFAULTS["seed"]))
    out = Path(_resolve("out", out_dir, cfg, _DEFAULTS["out"]))
    name = _resolve("state", state_name, cfg, "study")
    nrepeats = int(_resolve("repeats", repeats, cfg, _DEFAULTS["repeats"]))
    budget_text = _resolve("budgets", budgets, cfg, None)
    grid_list = list(grid_specs) or list(cfg.get("grids", [])) or \
        ["equiangular:M=7", "lebedev110"]

    preps = builtin_preparations()
    if name not in preps or preps[name].width != 1:
        raise CliError(f"--state must be a builtin single-qubit state, got {name!r}")
    if budget_text is None:
        raise CliError("missing --budgets")
    try:
        budget_values = [int(b) for b in str(budget_text).split(",") if b.strip()]
    except ValueError as exc:
        raise CliError(f"bad --budgets {budget_text!r}: {exc}")
    if len(budget_values) < 2:
        raise CliError("need at least two shot budgets")
    grids = [_parse_grid(s) for s in grid_list]
    for g in grids:
        if min(budget_values) < len(g):
            raise CliError(f"budget {min(budget_values)} smaller than the "
                           f"{len(g)}-point grid {g.scheme}")

    rows = sampling_study(preps[name], grids, budget_values, nrepeats, master_seed)
    write_study_csv(out / "study.csv", rows)
    click.echo(f"sampling-study state={name} repeats={nrepeats} "
               f"rows={len(rows)} -> {out / 'study.csv'}")


@main.command("export-basis")
@click.option("--qubits", type=click.IntRange(1, 2), default=1)
@click.option("--grid", "grid_spec", default=None)
@click.option("--out", "out_dir", default=None)
def cmd_export_basis(qubits, grid_spec, out_dir):
    """Dump the ideal basis droplets for inspection."""
    grid = _parse_grid(grid_spec or _DEFAULTS["grid"])
    out = Path(out_dir or _DEFAULTS["out"])
    lines = ["word,label,rank,beta,alpha,re,im,abs,arg"]
    for word in basis_words(qubits):
        for d in basis_droplet(qubits, word, grid):
            for i in range(len(grid)):
                v = d.values[i]
                lines.append(
                    f"{''.join(word)},{d.key.label},{d.key.rank},"
                    + ",".join(repr(float(x)) for x in
                               (grid.beta[i], grid.alpha[i], v.real, v.imag,
                                abs(v), np.angle(v))))
    _write(out / f"basis_{qubits}q.csv", "\n".join(lines) + "\n")
    click.echo(f"export-basis qubits={qubits} grid={grid.scheme} "
               f"-> {out / f'basis_{qubits}q.csv'}")


if __name__ == "__main__":
    main()
