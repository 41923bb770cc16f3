"""Gate-level circuits, ideal statevector execution, and shot sampling.

Circuits are immutable once built; simulation and sampling are pure functions
of (circuit, initial state, shots, seed) and can safely run concurrently.
Measurement always covers all qubits in the computational basis; any other
observable is obtained through detection-associated rotations appended to the
circuit. Bitstrings follow the register order: qubit 0 is the leftmost
character and the most significant bit.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .qcore import IDENTITY_2, MAX_QUBITS, is_unitary, kron_all

__all__ = [
    "Gate",
    "Circuit",
    "Counts",
    "u3_matrix",
    "u3_gate",
    "h_gate",
    "x_gate",
    "cx_gate",
    "cu_gate",
    "barrier",
    "scan_rotation_gate",
    "controlled_u",
    "gate_matrix",
    "circuit_unitary",
    "run_statevector",
    "sample_counts",
    "derive_rng",
    "z_string_expectation",
    "expectations_from_counts",
    "serialize_circuit",
    "parse_circuit",
]

log = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Gate:
    """One gate: kind in {'u3','h','x','cx','cu','barrier'}.

    ``params`` holds the (theta, phi, lam) angles for u3 gates, in radians.
    ``matrix`` holds the controlled block u for cu gates (not the full
    controlled matrix).
    """

    kind: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()
    matrix: np.ndarray | None = None

    def __post_init__(self):
        if any(not math.isfinite(p) for p in self.params):
            raise ValueError(f"non-finite gate parameter in {self.params}")


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...]
    label: str = ""

    def __post_init__(self):
        if not 1 <= self.width <= MAX_QUBITS:
            raise ValueError(f"unsupported circuit width {self.width}")
        for g in self.gates:
            if any(q < 0 or q >= self.width for q in g.qubits):
                raise ValueError(f"gate {g.kind} on {g.qubits} exceeds width {self.width}")

    def extended(self, extra_gates, label: str | None = None) -> "Circuit":
        return Circuit(self.width, self.gates + tuple(extra_gates),
                       self.label if label is None else label)


@dataclass(frozen=True)
class Counts:
    """Measured shot counts per computational-basis bitstring."""

    counts: dict[str, int]
    shots: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts do not sum to shots")

    @property
    def width(self) -> int:
        return len(next(iter(self.counts)))

    def probabilities(self) -> dict[str, float]:
        return {b: n / self.shots for b, n in self.counts.items()}


def u3_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    """General single-qubit rotation: RZ(phi) RY(theta) RZ(lam) up to global phase."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array(
        [[c, -np.exp(1j * lam) * s],
         [np.exp(1j * phi) * s, np.exp(1j * (lam + phi)) * c]],
        dtype=complex,
    )


def u3_gate(qubit: int, theta: float, phi: float, lam: float) -> Gate:
    return Gate("u3", (qubit,), (theta, phi, lam))


def h_gate(qubit: int) -> Gate:
    return Gate("h", (qubit,))


def x_gate(qubit: int) -> Gate:
    return Gate("x", (qubit,))


def cx_gate(control: int, target: int) -> Gate:
    if control == target:
        raise ValueError("cx control and target must differ")
    return Gate("cx", (control, target))


def cu_gate(control: int, targets, u) -> Gate:
    u = np.asarray(u, dtype=complex)
    targets = tuple(targets)
    if u.shape != (2 ** len(targets),) * 2:
        raise ValueError(f"cu block shape {u.shape} does not match targets {targets}")
    if not is_unitary(u):
        raise ValueError("cu block is not unitary")
    if control in targets:
        raise ValueError("cu control must not be a target")
    return Gate("cu", (control, *targets), matrix=u)


def barrier() -> Gate:
    return Gate("barrier", ())


def _wrap_scan_angles(beta: float, alpha: float) -> tuple[float, float]:
    """Map (beta, alpha) to the canonical ranges [0, pi] x [0, 2*pi]."""
    b = math.fmod(beta, _TWO_PI)
    if b < 0:
        b += _TWO_PI
    a = alpha
    if b > math.pi:
        b = _TWO_PI - b
        a += math.pi
    if not 0.0 <= a <= _TWO_PI:
        a = math.fmod(a, _TWO_PI)
        if a < 0:
            a += _TWO_PI
    return b, a


def scan_rotation_gate(beta: float, alpha: float, qubit: int = 0) -> Gate:
    """Per-qubit inverse scanning rotation: u3(beta, alpha, 0)^-1 = u3(-beta, 0, -alpha).

    Angles outside [0, pi] x [0, 2*pi] are wrapped onto the same sphere
    direction and a warning is logged (alpha = 2*pi is accepted silently;
    equiangular grids emit it at the seam).
    """
    if not (0.0 <= beta <= math.pi and 0.0 <= alpha <= _TWO_PI):
        wb, wa = _wrap_scan_angles(beta, alpha)
        log.warning("scan angles (%.6g, %.6g) outside range; wrapped to (%.6g, %.6g)",
                    beta, alpha, wb, wa)
        beta, alpha = wb, wa
    return u3_gate(qubit, -beta, 0.0, -alpha)


def controlled_u(u) -> np.ndarray:
    """Block matrix diag(identity, u) controlled on the most significant qubit."""
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u):
        raise ValueError("controlled_u requires a unitary block")
    dim = u.shape[0]
    out = np.zeros((2 * dim, 2 * dim), dtype=complex)
    out[:dim, :dim] = np.eye(dim)
    out[dim:, dim:] = u
    return out


_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
_X = np.array([[0, 1], [1, 0]], dtype=complex)


def _embed_single(u: np.ndarray, qubit: int, width: int) -> np.ndarray:
    factors = [u if q == qubit else IDENTITY_2 for q in range(width)]
    return kron_all(*factors)


def _embed_controlled(block: np.ndarray, control: int, targets: tuple[int, ...],
                      width: int) -> np.ndarray:
    dim = 2**width
    out = np.zeros((dim, dim), dtype=complex)
    cbit = width - 1 - control
    tbits = [width - 1 - t for t in targets]
    for col in range(dim):
        if not (col >> cbit) & 1:
            out[col, col] = 1.0
            continue
        sub = 0
        for k, tb in enumerate(tbits):
            sub = (sub << 1) | ((col >> tb) & 1)
        base = col
        for tb in tbits:
            base &= ~(1 << tb)
        for row_sub in range(block.shape[0]):
            row = base | (1 << cbit)
            for k, tb in enumerate(tbits):
                if (row_sub >> (len(tbits) - 1 - k)) & 1:
                    row |= 1 << tb
            out[row, col] = block[row_sub, sub]
    return out


def gate_matrix(gate: Gate, width: int) -> np.ndarray:
    """Full-width unitary matrix of a gate."""
    if gate.kind == "u3":
        return _embed_single(u3_matrix(*gate.params), gate.qubits[0], width)
    if gate.kind == "h":
        return _embed_single(_H, gate.qubits[0], width)
    if gate.kind == "x":
        return _embed_single(_X, gate.qubits[0], width)
    if gate.kind == "cx":
        return _embed_controlled(_X, gate.qubits[0], gate.qubits[1:], width)
    if gate.kind == "cu":
        return _embed_controlled(gate.matrix, gate.qubits[0], gate.qubits[1:], width)
    if gate.kind == "barrier":
        return np.eye(2**width, dtype=complex)
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Product of all gate matrices, in application order."""
    u = np.eye(2**circuit.width, dtype=complex)
    for g in circuit.gates:
        if g.kind == "barrier":
            continue
        u = gate_matrix(g, circuit.width) @ u
    return u


def run_statevector(circuit: Circuit, initial=None) -> np.ndarray:
    """Apply the circuit's gates to an initial state (default |0...0>)."""
    dim = 2**circuit.width
    if initial is None:
        psi = np.zeros(dim, dtype=complex)
        psi[0] = 1.0
    else:
        psi = np.asarray(initial, dtype=complex).ravel()
        if psi.size != dim:
            raise ValueError(f"initial state dimension {psi.size} != {dim}")
    for g in circuit.gates:
        if g.kind == "barrier":
            continue
        psi = gate_matrix(g, circuit.width) @ psi
    return psi


def derive_rng(master_seed: int, *stream_keys: int) -> np.random.Generator:
    """Independent, reproducible random stream for (master seed, key...).

    Grid points and circuits get their own streams, so runs are deterministic
    regardless of execution order or parallelism.
    """
    return np.random.default_rng(np.random.SeedSequence((master_seed, *stream_keys)))


def outcome_probabilities(circuit: Circuit, initial=None) -> np.ndarray:
    psi = run_statevector(circuit, initial)
    p = np.abs(psi) ** 2
    return p / p.sum()


def sample_counts(circuit: Circuit, initial=None, shots: int = 1,
                  seed: int | np.random.Generator = 0) -> Counts:
    """Multinomial draw of `shots` outcomes from the final state's probabilities."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    p = outcome_probabilities(circuit, initial)
    draws = rng.multinomial(shots, p)
    width = circuit.width
    counts = {format(i, f"0{width}b"): int(n) for i, n in enumerate(draws) if n > 0}
    return Counts(counts, shots)


def z_string_expectation(counts: Counts, qubits: tuple[int, ...]) -> float:
    """Expectation of a product of sigma_z on `qubits` from measured counts."""
    if counts.shots == 0:
        raise ValueError("zero total shots")
    total = 0.0
    for bits, n in counts.counts.items():
        parity = sum(int(bits[q]) for q in qubits) & 1
        total += -n if parity else n
    return total / counts.shots


def expectations_from_counts(counts: Counts) -> dict[tuple[int, ...], float]:
    """All z-string expectations for the measured register.

    Keys are tuples of qubit indices: () is the identity (always exactly 1),
    (0,) and (1,) the single-qubit sigma_z terms and (0, 1) the two-qubit
    correlation, mirroring the signed probability combinations p0 - p1 etc.
    """
    if not counts.counts:
        raise ValueError("empty counts")
    width = counts.width
    out: dict[tuple[int, ...], float] = {(): 1.0}
    for q in range(width):
        out[(q,)] = z_string_expectation(counts, (q,))
    if width >= 2:
        for q1 in range(width):
            for q2 in range(q1 + 1, width):
                out[(q1, q2)] = z_string_expectation(counts, (q1, q2))
    return out


def _format_floats(values) -> str:
    return " ".join(repr(float(v)) for v in values)


def serialize_circuit(circuit: Circuit) -> str:
    """Line-oriented text form, one gate per line.

    Grammar::

        QUBITS <n>
        # <comment>
        U3 q<i> <theta> <phi> <lambda>
        H q<i>
        X q<i>
        CX q<c> q<t>
        CU q<c> q<t>... <re im ... row-major block entries>
        BARRIER
    """
    lines = [f"QUBITS {circuit.width}"]
    if circuit.label:
        lines.append(f"# {circuit.label}")
    for g in circuit.gates:
        if g.kind == "u3":
            lines.append(f"U3 q{g.qubits[0]} {_format_floats(g.params)}")
        elif g.kind == "h":
            lines.append(f"H q{g.qubits[0]}")
        elif g.kind == "x":
            lines.append(f"X q{g.qubits[0]}")
        elif g.kind == "cx":
            lines.append(f"CX q{g.qubits[0]} q{g.qubits[1]}")
        elif g.kind == "cu":
            flat = []
            for entry in g.matrix.ravel():
                flat += [entry.real, entry.imag]
            qubits = " ".join(f"q{q}" for q in g.qubits)
            lines.append(f"CU {qubits} {_format_floats(flat)}")
        elif g.kind == "barrier":
            lines.append("BARRIER")
        else:
            raise ValueError(f"unknown gate kind {g.kind!r}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    width = None
    label = ""
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if width is not None and not label and not gates:
                label = line[1:].strip()
            continue
        tokens = line.split()
        op = tokens[0].upper()
        try:
            if op == "QUBITS":
                width = int(tokens[1])
            elif op == "U3":
                q = int(tokens[1].lstrip("q"))
                gates.append(u3_gate(q, *(float(t) for t in tokens[2:5])))
            elif op == "H":
                gates.append(h_gate(int(tokens[1].lstrip("q"))))
            elif op == "X":
                gates.append(x_gate(int(tokens[1].lstrip("q"))))
            elif op == "CX":
                gates.append(cx_gate(int(tokens[1].lstrip("q")), int(tokens[2].lstrip("q"))))
            elif op == "CU":
                qubits = [int(t.lstrip("q")) for t in tokens[1:] if t.startswith("q")]
                numbers = [float(t) for t in tokens[1 + len(qubits):]]
                dim = 2 ** (len(qubits) - 1)
                if len(numbers) != 2 * dim * dim:
                    raise ValueError(f"expected {2 * dim * dim} block entries")
                flat = np.array(numbers).reshape(dim * dim, 2)
                block = (flat[:, 0] + 1j * flat[:, 1]).reshape(dim, dim)
                gates.append(cu_gate(qubits[0], qubits[1:], block))
            elif op == "BARRIER":
                gates.append(barrier())
            else:
                raise ValueError(f"unknown op {op!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}: {exc}") from exc
    if width is None:
        raise ValueError("missing QUBITS header line")
    return Circuit(width, tuple(gates), label)
