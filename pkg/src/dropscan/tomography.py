"""Scanning Wigner tomography pipelines, reconstruction, and fidelities.

State tomography (one and two qubits) scans a prepared state by inversely
rotating it and measuring axial-tensor expectation values at every grid
point; process tomography (one qubit) first maps the target unitary onto a
two-qubit density matrix with an ancilla-controlled gate, prepares the
system's maximally mixed state by temporal averaging, and reads the droplet
values off x/y components of the ancilla.

Grid points are independent work units with their own derived random
streams; results do not depend on evaluation order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .circuits import (
    Circuit,
    barrier,
    cu_gate,
    cx_gate,
    derive_rng,
    expectations_from_counts,
    h_gate,
    outcome_probabilities,
    run_statevector,
    sample_counts,
    scan_rotation_gate,
    u3_gate,
    u3_matrix,
    x_gate,
)
from .drops import (
    Droplet,
    DropletKey,
    basis_droplet_values,
    basis_words,
    harmonic_prefactor,
    legal_keys,
    word_label,
)
from .qcore import PAULI, density_from_state, is_unitary, pauli_word
from .sampling import SamplingGrid, discrete_scalar_product

__all__ = [
    "STATE_CALIBRATION",
    "PROCESS_CALIBRATION",
    "PROCESS_FIDELITY_SLACK",
    "DETECTION_PARAMS",
    "DetectionSetting",
    "DropletSet",
    "StudyRow",
    "TomographyReport",
    "detection_settings",
    "builtin_preparations",
    "builtin_process_targets",
    "pure_state_preparation",
    "state_tomography",
    "process_tomography",
    "temporal_average",
    "reconstruct_density",
    "reconstruct_process",
    "state_fidelity",
    "process_fidelity",
    "inject_error",
    "standard_tomography_baseline",
    "sampling_study",
    "combined_droplet",
    "droplet_records",
    "report_to_json",
    "report_from_json",
]

# Calibration of the droplet-overlap reconstruction onto exact Pauli
# coefficients r_w = tr(word . rho) / 2**n. The scanned label-l droplet is
# the harmonic image of the operator component expanded in unit-norm tensor
# operators, while the basis droplets are tabulated at function norm sqrt(2)
# (one qubit) and 1 (two qubits) against Pauli words of operator norm
# 2**(n/2); the overlap therefore returns exactly twice the Pauli
# coefficient for both system sizes.
STATE_CALIBRATION = 0.5

# For processes the scan reads an ancilla-extended physical density matrix
# that carries the mapped unitary in an off-diagonal block scaled by
# 1/2**(N+1) = 1/4, so the measured droplets are a quarter of the process
# droplet; the basis-droplet overlap doubles coefficients as above, leaving
# a net factor 1/2 to undo.
PROCESS_CALIBRATION = 2.0

# A raw linear-inversion process estimate is not renormalized, so its
# fidelity can exceed 1 by the quadrature error of a coarse grid (about
# 4e-3 on the default 8x15 grid). Report validation allows this much slack
# in process mode; state fidelity is a normalized overlap and needs none.
PROCESS_FIDELITY_SLACK = 0.02

_SQ2 = math.sqrt(2.0)

#: Per-qubit detection rotations mapping the measured sigma_z onto the named
#: axis: the inverse scanning rotations for (beta, alpha) = (pi/2, 0) and
#: (pi/2, pi/2).
DETECTION_PARAMS = {
    "x": (-math.pi / 2.0, 0.0, 0.0),
    "y": (-math.pi / 2.0, 0.0, -math.pi / 2.0),
    "z": None,
    "i": None,
}


@dataclass(frozen=True)
class DetectionSetting:
    """One measurement setting contributing to an axial-tensor expectation.

    ``rotations`` holds per-qubit u3 parameters (None = no rotation); after
    applying them, measuring the z-string on ``z_string`` realizes the Pauli
    word ``word``, which enters the tensor expectation with ``coefficient``
    (imaginary coefficients mark contributions to the imaginary droplet
    part in process mode).
    """

    index: int
    rotations: tuple[tuple[float, float, float] | None, ...]
    z_string: tuple[int, ...]
    word: tuple[str, ...]
    coefficient: complex


def _setting(index, word, coefficient):
    word = tuple(word)
    rotations = tuple(DETECTION_PARAMS[axis] for axis in word)
    z_string = tuple(q for q, axis in enumerate(word) if axis != "i")
    return DetectionSetting(index, rotations, z_string, word, coefficient)


def detection_settings(n: int, key: DropletKey, mode: str = "state"
                       ) -> tuple[DetectionSetting, ...]:
    """Minimal measurement settings whose weighted sum gives <T_j0(label)>."""
    if mode == "state":
        if key not in legal_keys(n):
            raise ValueError(f"key {key} illegal for n={n}")
        if n == 1:
            word = ("i",) if key.label == "e" else ("z",)
            return (_setting(1, word, 1.0 / _SQ2),)
        if key.label == "e":
            return (_setting(1, ("i", "i"), 0.5),)
        if key.label == "1":
            return (_setting(1, ("z", "i"), 0.5),)
        if key.label == "2":
            return (_setting(1, ("i", "z"), 0.5),)
        if key.rank == 0:
            c = 1.0 / (2.0 * math.sqrt(3.0))
            return (_setting(1, ("x", "x"), c), _setting(2, ("y", "y"), c),
                    _setting(3, ("z", "z"), c))
        if key.rank == 1:
            c = 1.0 / (2.0 * _SQ2)
            return (_setting(1, ("x", "y"), c), _setting(2, ("y", "x"), -c))
        c = 1.0 / (2.0 * math.sqrt(6.0))
        return (_setting(1, ("x", "x"), -c), _setting(2, ("y", "y"), -c),
                _setting(3, ("z", "z"), 2.0 * c))
    if mode == "process":
        if n != 1:
            raise ValueError("process settings are defined for one system qubit")
        if key not in legal_keys(1):
            raise ValueError(f"key {key} illegal for n=1")
        system_axis = "i" if key.label == "e" else "z"
        c = 1.0 / (2.0 * _SQ2)
        return (_setting(1, ("x", system_axis), c),
                _setting(2, ("y", system_axis), 1j * c))
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class DropletSet:
    """All droplets of one tomography run plus its provenance."""

    mode: str
    n: int
    grid: SamplingGrid
    droplets: dict[DropletKey, Droplet]
    shots: int | None
    seed: int
    backend: str

    def __post_init__(self):
        expected = set(legal_keys(self.n))
        if set(self.droplets) != expected:
            raise ValueError(f"droplet keys {set(self.droplets)} != {expected}")

    def values(self, label: str, rank: int) -> np.ndarray:
        return self.droplets[DropletKey(label, rank)].values


def combined_droplet(ds: DropletSet, label: str) -> np.ndarray:
    """Rank-summed droplet values for one label (a derived view)."""
    vals = [d.values for k, d in ds.droplets.items() if k.label == label]
    if not vals:
        raise KeyError(f"no droplets with label {label!r}")
    return np.sum(vals, axis=0)


def _z_expectations(circuit: Circuit, shots, rng) -> dict[tuple[int, ...], float]:
    if shots is None:
        p = outcome_probabilities(circuit)
        width = circuit.width
        out: dict[tuple[int, ...], float] = {}
        for mask in range(2**width):
            qubits = tuple(q for q in range(width) if (mask >> q) & 1)
            total = 0.0
            for idx, prob in enumerate(p):
                parity = 0
                for q in qubits:
                    parity ^= (idx >> (width - 1 - q)) & 1
                total += -prob if parity else prob
            out[qubits] = total
        return out
    counts = sample_counts(circuit, shots=shots, seed=rng)
    return expectations_from_counts(counts)


def _unique_signatures(settings_by_key):
    signatures: list[tuple] = []
    index: dict[tuple, int] = {}
    for settings in settings_by_key.values():
        for s in settings:
            if s.rotations not in index:
                index[s.rotations] = len(signatures)
                signatures.append(s.rotations)
    return signatures, index


def _detection_gates(signature) -> list:
    return [u3_gate(q, *params) for q, params in enumerate(signature)
            if params is not None]


def state_tomography(prep: Circuit, grid: SamplingGrid, shots: int | None = None,
                     seed: int = 0) -> DropletSet:
    """Scan a prepared 1- or 2-qubit state into its droplet set.

    ``shots`` is the per-grid-point shot count; None computes exact
    expectation values from the final statevector (the noiseless oracle).
    """
    n = prep.width
    if n not in (1, 2):
        raise ValueError(f"state tomography supports 1 or 2 qubits, got {n}")
    keys = legal_keys(n)
    settings_by_key = {k: detection_settings(n, k, "state") for k in keys}
    signatures, sig_index = _unique_signatures(settings_by_key)

    values = {k: np.zeros(len(grid), dtype=complex) for k in keys}
    for i in range(len(grid)):
        scan = [scan_rotation_gate(grid.beta[i], grid.alpha[i], q) for q in range(n)]
        per_signature = []
        for ci, sig in enumerate(signatures):
            circ = prep.extended([barrier(), *scan, barrier(), *_detection_gates(sig)])
            rng = derive_rng(seed, i, ci) if shots is not None else None
            per_signature.append(_z_expectations(circ, shots, rng))
        for k in keys:
            sj = harmonic_prefactor(k.rank)
            total = 0.0 + 0.0j
            for s in settings_by_key[k]:
                total += s.coefficient * per_signature[sig_index[s.rotations]][s.z_string]
            values[k][i] = sj * total

    droplets = {k: Droplet(k, grid, values[k]) for k in keys}
    backend = "ideal" if shots is None else "sampled"
    return DropletSet("state", n, grid, droplets, shots, seed, backend)


def temporal_average(expectation_sets) -> dict:
    """Arithmetic mean of expectation sets from basis-state initializations.

    Exactly reproduces the mixed-state expectation values when the inputs
    cover every computational basis state of the mixed subsystem.
    """
    expectation_sets = list(expectation_sets)
    if not expectation_sets:
        raise ValueError("no expectation sets to average")
    keys = set(expectation_sets[0])
    for es in expectation_sets[1:]:
        if set(es) != keys:
            raise ValueError("expectation sets cover different observables")
    return {k: sum(es[k] for es in expectation_sets) / len(expectation_sets)
            for k in keys}


def process_tomography(u, grid: SamplingGrid, shots: int | None = None,
                       seed: int = 0) -> DropletSet:
    """Scan a known single-qubit unitary into its droplet set.

    Runs four circuits per grid point: the ancilla is Hadamard-prepared, the
    system qubit is initialized in |0> and |1> (temporal averaging of the
    maximally mixed state), the controlled target gate maps the process onto
    the joint density matrix, the inverse scanning rotation acts on the
    system qubit only, and the ancilla is read out along x or y.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or not is_unitary(u):
        raise ValueError("process tomography requires a 2x2 unitary")
    keys = legal_keys(1)
    settings_by_key = {k: detection_settings(1, k, "process") for k in keys}
    signatures, sig_index = _unique_signatures(settings_by_key)

    values = {k: np.zeros(len(grid), dtype=complex) for k in keys}
    for i in range(len(grid)):
        scan = scan_rotation_gate(grid.beta[i], grid.alpha[i], qubit=1)
        averaged = {}
        for ci, sig in enumerate(signatures):
            branches = []
            for t, flip in enumerate((False, True)):
                gates = [h_gate(0)]
                if flip:
                    gates.append(x_gate(1))
                gates += [barrier(), cu_gate(0, (1,), u), barrier(), scan,
                          barrier(), *_detection_gates(sig)]
                circ = Circuit(2, tuple(gates))
                rng = (derive_rng(seed, i, ci * 2 + t)
                       if shots is not None else None)
                branches.append(_z_expectations(circ, shots, rng))
            averaged[ci] = temporal_average(branches)
        for k in keys:
            sj = harmonic_prefactor(k.rank)
            total = 0.0 + 0.0j
            for s in settings_by_key[k]:
                total += s.coefficient * averaged[sig_index[s.rotations]][s.z_string]
            values[k][i] = sj * total

    droplets = {k: Droplet(k, grid, values[k]) for k in keys}
    backend = "ideal" if shots is None else "sampled"
    return DropletSet("process", 1, grid, droplets, shots, seed, backend)


def _label_sums(ds: DropletSet) -> dict[str, np.ndarray]:
    labels = {k.label for k in ds.droplets}
    return {label: combined_droplet(ds, label) for label in labels}


def reconstruct_density(ds: DropletSet, n: int | None = None):
    """Density matrix and Pauli coefficients from a state droplet set.

    Coefficients come from discretized overlaps of the ideal basis droplets
    with the measured droplets (scaled by STATE_CALIBRATION); the matrix is
    symmetrized and trace-normalized, with no positivity projection.
    """
    n = ds.n if n is None else n
    if ds.mode != "state":
        raise ValueError("reconstruct_density expects a state droplet set")
    sums = _label_sums(ds)
    coefficients: dict[tuple[str, ...], complex] = {}
    rho = np.zeros((2**n, 2**n), dtype=complex)
    for word in basis_words(n):
        basis_vals = basis_droplet_values(n, word, ds.grid)
        measured = sums[word_label(word)]
        r = STATE_CALIBRATION * discrete_scalar_product(basis_vals, measured, ds.grid)
        coefficients[word] = r
        rho += r * pauli_word(word)
    rho = (rho + rho.conj().T) / 2.0
    trace = float(np.trace(rho).real)
    if abs(trace) < 1e-9:
        raise ValueError("reconstructed matrix has (near-)zero trace")
    return rho / trace, coefficients


def reconstruct_process(ds: DropletSet):
    """Process matrix and complex Pauli coefficients from a process droplet set."""
    if ds.mode != "process":
        raise ValueError("reconstruct_process expects a process droplet set")
    total = combined_droplet(ds, "e") + combined_droplet(ds, "1")
    coefficients: dict[tuple[str, ...], complex] = {}
    u = np.zeros((2, 2), dtype=complex)
    for word in basis_words(1):
        basis_vals = basis_droplet_values(1, word, ds.grid)
        c = PROCESS_CALIBRATION * discrete_scalar_product(basis_vals, total, ds.grid)
        coefficients[word] = c
        u += c * PAULI[word[0]]
    return u, coefficients


def state_fidelity(rho, target) -> float:
    """Normalized overlap tr(rho target) / sqrt(tr rho^2 tr target^2)."""
    rho = np.asarray(rho, dtype=complex)
    target = np.asarray(target, dtype=complex)
    if rho.shape != target.shape:
        raise ValueError("dimension mismatch")
    p1 = float(np.trace(rho @ rho).real)
    p2 = float(np.trace(target @ target).real)
    if p1 <= 0 or p2 <= 0:
        raise ValueError("zero-purity input")
    return float(np.trace(rho @ target).real / math.sqrt(p1 * p2))


def process_fidelity(u, target) -> float:
    """Global-phase-invariant overlap |tr(u target^dagger)| / dim."""
    u = np.asarray(u, dtype=complex)
    target = np.asarray(target, dtype=complex)
    if u.shape != target.shape:
        raise ValueError("dimension mismatch")
    return float(abs(np.trace(u @ target.conj().T)) / u.shape[0])


def inject_error(prep: Circuit, extra) -> Circuit:
    """Append deliberate local rotations (qubit, (theta, phi, lam)) to a preparation."""
    gates = [u3_gate(q, *params) for q, params in extra]
    if not gates:
        return prep
    return prep.extended(gates, label=f"{prep.label}+error" if prep.label else "error")


def pure_state_preparation(amplitudes, label: str = "") -> Circuit:
    """Single-qubit preparation circuit for a (normalized) amplitude pair."""
    c = np.asarray(amplitudes, dtype=complex).ravel()
    if c.size != 2:
        raise ValueError("expected a single-qubit amplitude pair")
    c = c / np.linalg.norm(c)
    theta = 2.0 * math.atan2(abs(c[1]), abs(c[0]))
    if abs(c[0]) < 1e-15:
        phi = float(np.angle(c[1]))
    elif abs(c[1]) < 1e-15:
        phi = 0.0
    else:
        phi = float(np.angle(c[1]) - np.angle(c[0]))
    return Circuit(1, (u3_gate(0, theta, phi, 0.0),), label)


def builtin_preparations() -> dict[str, Circuit]:
    """Named preparation circuits for the states used across the experiments."""
    return {
        "zero": Circuit(1, (), "zero"),
        "one": Circuit(1, (x_gate(0),), "one"),
        "plus": Circuit(1, (u3_gate(0, math.pi / 2.0, 0.0, 0.0),), "plus"),
        "plus-i": Circuit(1, (u3_gate(0, math.pi / 2.0, math.pi / 2.0, 0.0),), "plus-i"),
        "amp": pure_state_preparation([0.885, 0.466], "amp"),
        "study": pure_state_preparation([-0.69 - 0.098j, 0.66 + 0.30j], "study"),
        "bell": Circuit(2, (h_gate(0), cx_gate(0, 1)), "bell"),
        "00+01": Circuit(2, (h_gate(1),), "00+01"),
    }


def builtin_process_targets() -> dict[str, np.ndarray]:
    h = np.array([[1, 1], [1, -1]], dtype=complex) / _SQ2
    return {
        "h": h,
        "x": np.array([[0, 1], [1, 0]], dtype=complex),
        "ry-3pi2": u3_matrix(3.0 * math.pi / 2.0, 0.0, 0.0),
    }


def standard_tomography_baseline(prep: Circuit, shots: int | None = None,
                                 seed: int = 0) -> np.ndarray:
    """Single-qubit Pauli-basis tomography with eigenvalue clipping.

    Measures <sigma_x>, <sigma_y>, <sigma_z> with shots/3 each (exactly, in
    ideal mode), inverts linearly, clips eigenvalues to [0, 1], and
    renormalizes, so the output is always a valid density matrix.
    """
    if prep.width != 1:
        raise ValueError("baseline tomography is single-qubit only")
    expectations = {}
    for ci, axis in enumerate(("x", "y", "z")):
        det = _detection_gates((DETECTION_PARAMS[axis],))
        circ = prep.extended(det)
        per_setting = None if shots is None else max(1, shots // 3)
        rng = derive_rng(seed, ci) if shots is not None else None
        exps = _z_expectations(circ, per_setting, rng)
        expectations[axis] = exps[(0,)]
    rho = 0.5 * (PAULI["i"] + sum(expectations[a] * PAULI[a] for a in ("x", "y", "z")))
    evals, evecs = np.linalg.eigh(rho)
    evals = np.clip(evals, 0.0, 1.0)
    if evals.sum() <= 0:
        raise ValueError("all eigenvalues clipped to zero")
    evals = evals / evals.sum()
    return (evecs * evals) @ evecs.conj().T


@dataclass(frozen=True)
class StudyRow:
    scheme: str
    n_points: int
    shots_per_point: int
    n_total: int
    mean_fidelity: float
    std_fidelity: float


def _run_seed(seed: int, *keys: int) -> int:
    return int(np.random.SeedSequence((seed, *keys)).generate_state(1)[0])


def sampling_study(prep: Circuit, grids, shot_budgets, repeats: int = 100,
                   seed: int = 0, include_baseline: bool = True) -> list[StudyRow]:
    """Mean state fidelity vs total shot budget for several sampling schemes.

    Per-point shots are the budget divided by the number of grid points
    (rounded, minimum enforced), so schemes are compared at equal total
    shot counts. The standard-tomography baseline spends the whole budget
    on its three measurement settings.
    """
    if prep.width != 1:
        raise ValueError("the sampling study uses a single-qubit state")
    budgets = sorted(int(b) for b in shot_budgets)
    target = density_from_state(run_statevector(prep))
    rows: list[StudyRow] = []
    for gi, grid in enumerate(grids):
        n_points = len(grid)
        for bi, budget in enumerate(budgets):
            shots_pp = int(round(budget / n_points))
            if shots_pp < 1:
                raise ValueError(f"budget {budget} is smaller than the "
                                 f"{n_points}-point grid")
            fid = np.empty(repeats)
            for rep in range(repeats):
                ds = state_tomography(prep, grid, shots_pp,
                                      seed=_run_seed(seed, gi, bi, rep))
                rho, _ = reconstruct_density(ds)
                fid[rep] = state_fidelity(rho, target)
            rows.append(StudyRow(grid.scheme, n_points, shots_pp,
                                 shots_pp * n_points, float(fid.mean()),
                                 float(fid.std(ddof=1))))
    if include_baseline:
        for bi, budget in enumerate(budgets):
            fid = np.empty(repeats)
            for rep in range(repeats):
                rho = standard_tomography_baseline(
                    prep, budget, seed=_run_seed(seed, 10_000, bi, rep))
                fid[rep] = state_fidelity(rho, target)
            rows.append(StudyRow("standard", 3, budget // 3, (budget // 3) * 3,
                                 float(fid.mean()), float(fid.std(ddof=1))))
    rows.sort(key=lambda r: (r.scheme, r.n_total))
    return rows


@dataclass(frozen=True)
class TomographyReport:
    """Droplets, reconstruction, fidelity, and full provenance of one run."""

    droplet_set: DropletSet
    matrix: np.ndarray
    coefficients: dict[tuple[str, ...], complex]
    fidelity: float | None
    target: str = ""
    injected_errors: tuple[str, ...] = ()
    noise_model: str = "shot-noise-only; no readout-error mitigation"
    schema_version: int = 1


def validate_report(report: TomographyReport) -> None:
    """Raise if a report violates its numerical invariants."""
    ds = report.droplet_set
    for d in ds.droplets.values():
        if not np.all(np.isfinite(d.values)):
            raise ValueError("non-finite droplet values")
    m = report.matrix
    if ds.mode == "state":
        if np.max(np.abs(m - m.conj().T)) > 1e-9:
            raise ValueError("reconstructed density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-9:
            raise ValueError("reconstructed density matrix trace != 1")
        if report.fidelity is not None and not -1e-9 <= report.fidelity <= 1.0 + 1e-9:
            raise ValueError(f"state fidelity {report.fidelity} out of range")
    else:
        upper = 1.0 + PROCESS_FIDELITY_SLACK
        if report.fidelity is not None and not 0.0 <= report.fidelity <= upper:
            raise ValueError(f"process fidelity {report.fidelity} out of range")


def droplet_records(ds: DropletSet):
    """Flat per-point droplet records: (label, rank, beta, alpha, re, im, abs, arg)."""
    records = []
    for key in sorted(ds.droplets):
        d = ds.droplets[key]
        for i in range(len(ds.grid)):
            v = d.values[i]
            records.append((key.label, key.rank, float(ds.grid.beta[i]),
                            float(ds.grid.alpha[i]), float(v.real), float(v.imag),
                            float(abs(v)), float(np.angle(v))))
    return records


def _word_str(word: tuple[str, ...]) -> str:
    return "".join(word)


def report_to_json(report: TomographyReport) -> str:
    ds = report.droplet_set
    payload = {
        "schema_version": report.schema_version,
        "mode": ds.mode,
        "system_qubits": ds.n,
        "backend": ds.backend,
        "shots": ds.shots,
        "seed": ds.seed,
        "noise_model": report.noise_model,
        "target": report.target,
        "injected_errors": list(report.injected_errors),
        "grid": {
            "scheme": ds.grid.scheme,
            "beta": ds.grid.beta.tolist(),
            "alpha": ds.grid.alpha.tolist(),
            "weights": ds.grid.weights.tolist(),
        },
        "droplets": [
            {
                "label": key.label,
                "rank": key.rank,
                "re": ds.droplets[key].values.real.tolist(),
                "im": ds.droplets[key].values.imag.tolist(),
            }
            for key in sorted(ds.droplets)
        ],
        "coefficients": [
            {"word": _word_str(w), "re": c.real, "im": c.imag}
            for w, c in sorted(report.coefficients.items())
        ],
        "matrix": {
            "dim": report.matrix.shape[0],
            "entries": [[v.real, v.imag] for v in report.matrix.ravel()],
        },
        "fidelity": report.fidelity,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_from_json(text: str) -> TomographyReport:
    payload = json.loads(text)
    grid = SamplingGrid(payload["grid"]["scheme"],
                        np.array(payload["grid"]["beta"]),
                        np.array(payload["grid"]["alpha"]),
                        np.array(payload["grid"]["weights"]))
    droplets = {}
    for entry in payload["droplets"]:
        key = DropletKey(entry["label"], entry["rank"])
        droplets[key] = Droplet(key, grid,
                                np.array(entry["re"]) + 1j * np.array(entry["im"]))
    ds = DropletSet(payload["mode"], payload["system_qubits"], grid, droplets,
                    payload["shots"], payload["seed"], payload["backend"])
    dim = payload["matrix"]["dim"]
    entries = np.array(payload["matrix"]["entries"])
    matrix = (entries[:, 0] + 1j * entries[:, 1]).reshape(dim, dim)
    coefficients = {tuple(e["word"]): complex(e["re"], e["im"])
                    for e in payload["coefficients"]}
    return TomographyReport(ds, matrix, coefficients, payload["fidelity"],
                            payload["target"], tuple(payload["injected_errors"]),
                            payload["noise_model"], payload["schema_version"])
