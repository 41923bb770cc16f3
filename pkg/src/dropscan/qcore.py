"""Dense complex linear algebra and multi-qubit operator construction.

Everything here works on plain ``numpy`` arrays of ``complex128``. Operators
are square matrices of dimension 2**n for n in {1, 2, 3}; qubit index 0 is
the most significant bit of the computational-basis label, i.e. basis state
|q0 q1 ... q_{n-1}> has integer index q0*2**(n-1) + ... + q_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "TOL",
    "Tolerances",
    "PAULI",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "IDENTITY_2",
    "MAX_QUBITS",
    "kron",
    "kron_all",
    "embedded_pauli",
    "pauli_word",
    "expectation",
    "operator_scalar_product",
    "basis_state",
    "state_vector",
    "density_from_state",
    "is_unitary",
    "is_density_matrix",
    "random_pure_state",
    "random_unitary",
]


@dataclass(frozen=True)
class Tolerances:
    """Central numerical tolerances used across the package."""

    unitarity: float = 1e-12
    hermiticity: float = 1e-12
    trace: float = 1e-12
    norm: float = 1e-12
    real_expectation: float = 1e-10


TOL = Tolerances()

MAX_QUBITS = 3

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: sigma_0 .. sigma_3 in the standard order (identity, x, y, z).
PAULI = {
    "i": IDENTITY_2,
    "x": SIGMA_X,
    "y": SIGMA_Y,
    "z": SIGMA_Z,
}

_AXES = ("i", "x", "y", "z")


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square operators."""
    return np.kron(_as_square(a), _as_square(b))


def kron_all(*mats) -> np.ndarray:
    """Left-to-right Kronecker product of one or more square operators."""
    out = _as_square(mats[0])
    for m in mats[1:]:
        out = np.kron(out, _as_square(m))
    return out


def embedded_pauli(axis: str, position: int, n: int) -> np.ndarray:
    """Pauli operator on one qubit of an n-qubit register.

    ``position`` is 1-based (position 1 acts on the most significant qubit),
    so ``embedded_pauli("x", 2, 2)`` is 1 (x) sigma_x.
    """
    if axis not in _AXES:
        raise ValueError(f"unknown axis {axis!r}; expected one of {_AXES}")
    if not 1 <= position <= n <= MAX_QUBITS:
        raise ValueError(f"position {position} out of range for {n} qubits")
    factors = [PAULI[axis] if k == position else IDENTITY_2 for k in range(1, n + 1)]
    return kron_all(*factors)


def pauli_word(axes, n: int | None = None) -> np.ndarray:
    """Tensor product of per-qubit Paulis, e.g. ('z', 'x') -> sigma_z (x) sigma_x."""
    axes = tuple(axes)
    if n is not None and len(axes) != n:
        raise ValueError(f"word length {len(axes)} does not match n={n}")
    return kron_all(*(PAULI[a] for a in axes))


def expectation(observable, rho) -> complex:
    """tr(observable . rho)."""
    observable = _as_square(observable)
    rho = _as_square(rho)
    if observable.shape != rho.shape:
        raise ValueError(f"dimension mismatch: {observable.shape} vs {rho.shape}")
    return complex(np.trace(observable @ rho))


def operator_scalar_product(a, b) -> complex:
    """Hilbert-Schmidt scalar product tr(a^dagger b)."""
    a = _as_square(a)
    b = _as_square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.sum(np.conj(a) * b))


def basis_state(index: int, n: int) -> np.ndarray:
    """Computational basis state |index> of an n-qubit register."""
    dim = 2**n
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {n} qubits")
    psi = np.zeros(dim, dtype=complex)
    psi[index] = 1.0
    return psi


def state_vector(amplitudes) -> np.ndarray:
    """Validate and normalize a state vector (norm must already be within 1e-6)."""
    psi = np.asarray(amplitudes, dtype=complex).ravel()
    if psi.size not in (2, 4, 8):
        raise ValueError(f"state dimension {psi.size} is not 2**n for n <= {MAX_QUBITS}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-6:
        raise ValueError(f"state norm {norm} too far from 1")
    return psi / norm


def density_from_state(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


def is_unitary(u, tol: float = TOL.unitarity) -> bool:
    u = _as_square(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) < tol)


def is_density_matrix(rho, tol: float = TOL.hermiticity) -> bool:
    rho = _as_square(rho)
    hermitian = np.max(np.abs(rho - rho.conj().T)) < tol
    unit_trace = abs(np.trace(rho) - 1.0) < TOL.trace
    return bool(hermitian and unit_trace)


def random_pure_state(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state of n qubits."""
    z = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return z / np.linalg.norm(z)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary on n qubits (QR of a Ginibre matrix)."""
    dim = 2**n
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
