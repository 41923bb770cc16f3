"""Axial tensor operators, spherical harmonics, and droplet machinery.

A droplet is one labeled component of an operator's spherical-function
representation, sampled on a grid. Labels name the qubit subset a component
acts on: "e" (empty set, identity part), "1", "2", and "12" for up to two
qubits; each label carries a fixed set of tensor ranks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import IDENTITY_2, SIGMA_Y, SIGMA_Z, kron, pauli_word
from .sampling import SamplingGrid

__all__ = [
    "LABELS",
    "RANK_SETS",
    "DropletKey",
    "Droplet",
    "legal_keys",
    "axial_tensor",
    "rotation_operator",
    "spherical_harmonic",
    "harmonic_prefactor",
    "basis_harmonic_coefficients",
    "basis_droplet",
    "basis_words",
    "word_label",
    "evaluate_harmonics",
    "harmonic_coefficients",
]

LABELS = ("e", "1", "2", "12")

#: Ranks carried by each label for systems of up to two qubits.
RANK_SETS = {"e": (0,), "1": (1,), "2": (1,), "12": (0, 1, 2)}


@dataclass(frozen=True, order=True)
class DropletKey:
    label: str
    rank: int

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown label {self.label!r}")
        if self.rank not in RANK_SETS[self.label]:
            raise ValueError(f"rank {self.rank} illegal for label {self.label!r}")

    def __str__(self):
        return f"f{self.rank}({self.label})"


@dataclass(frozen=True)
class Droplet:
    """Complex droplet values, one per grid point."""

    key: DropletKey
    grid: SamplingGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "values", values)
        if values.shape != (len(self.grid),):
            raise ValueError(f"droplet has {values.shape} values for a "
                             f"{len(self.grid)}-point grid")
        if not np.all(np.isfinite(values)):
            raise ValueError("droplet values must be finite")


def legal_keys(n: int) -> tuple[DropletKey, ...]:
    """Droplet keys of an n-qubit state, in a fixed canonical order."""
    if n == 1:
        return (DropletKey("e", 0), DropletKey("1", 1))
    if n == 2:
        return (DropletKey("e", 0), DropletKey("1", 1), DropletKey("2", 1),
                DropletKey("12", 0), DropletKey("12", 1), DropletKey("12", 2))
    raise ValueError(f"no droplet keys defined for n={n}")


def axial_tensor(n: int, key: DropletKey) -> np.ndarray:
    """Axial (order-zero) tensor operator for one or two qubits.

    All returned operators are Hermitian with unit Frobenius norm; distinct
    keys are pairwise orthogonal under tr(A^dagger B).
    """
    if key not in legal_keys(n):
        raise ValueError(f"key {key} illegal for n={n}")
    if n == 1:
        if key.label == "e":
            return IDENTITY_2 / math.sqrt(2.0)
        return SIGMA_Z / math.sqrt(2.0)
    if key.label == "e":
        return np.eye(4, dtype=complex) / 2.0
    if key.label == "1":
        return pauli_word(("z", "i")) / 2.0
    if key.label == "2":
        return pauli_word(("i", "z")) / 2.0
    if key.rank == 0:
        return (pauli_word(("x", "x")) + pauli_word(("y", "y"))
                + pauli_word(("z", "z"))) / (2.0 * math.sqrt(3.0))
    if key.rank == 1:
        return (pauli_word(("x", "y")) - pauli_word(("y", "x"))) / (2.0 * math.sqrt(2.0))
    # rank 2 carries a leading minus sign; do not renormalize
    return -(pauli_word(("x", "x")) + pauli_word(("y", "y"))
             - 2.0 * pauli_word(("z", "z"))) / (2.0 * math.sqrt(6.0))


def _rotation_1q(beta: float, alpha: float) -> np.ndarray:
    """exp(-i alpha sigma_z / 2) exp(-i beta sigma_y / 2)."""
    c, s = math.cos(beta / 2.0), math.sin(beta / 2.0)
    za = np.exp(-0.5j * alpha)
    return np.array([[za * c, -za * s], [np.conj(za) * s, np.conj(za) * c]])


def rotation_operator(n: int, beta: float, alpha: float) -> np.ndarray:
    """Scanning rotation: z-rotation by alpha after y-rotation by beta, on every qubit.

    The generators are sums of local operators, so the n-qubit rotation is the
    n-fold Kronecker power of the single-qubit one.
    """
    r = _rotation_1q(beta, alpha)
    out = r
    for _ in range(n - 1):
        out = kron(out, r)
    return out


def harmonic_prefactor(j: int) -> float:
    """sqrt((2j+1) / (4 pi)), the rank prefactor relating scans to droplets."""
    return math.sqrt((2 * j + 1) / (4.0 * math.pi))


def spherical_harmonic(j: int, m: int, beta, alpha):
    """Orthonormal complex spherical harmonic with Condon-Shortley phase, j <= 2.

    Accepts scalars or arrays for the angles. Only explicit closed forms are
    used; the band limit of two-qubit droplets makes higher ranks unnecessary.
    """
    if not (0 <= j <= 2 and abs(m) <= j):
        raise ValueError(f"invalid harmonic indices (j={j}, m={m})")
    beta = np.asarray(beta, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    c, s = np.cos(beta), np.sin(beta)
    if j == 0:
        out = np.full(np.broadcast(beta, alpha).shape, 0.5 / math.sqrt(math.pi),
                      dtype=complex)
        return out if out.ndim else complex(out)
    phase = np.exp(1j * m * alpha)
    if j == 1:
        if m == 0:
            out = math.sqrt(3.0 / (4.0 * math.pi)) * c.astype(complex)
        else:
            out = -np.sign(m) * math.sqrt(3.0 / (8.0 * math.pi)) * s * phase
    else:
        if m == 0:
            out = math.sqrt(5.0 / (16.0 * math.pi)) * (3.0 * c * c - 1.0).astype(complex)
        elif abs(m) == 1:
            out = -np.sign(m) * math.sqrt(15.0 / (8.0 * math.pi)) * s * c * phase
        else:
            out = math.sqrt(15.0 / (32.0 * math.pi)) * s * s * phase
    return out if out.ndim else complex(out)


_SQ2 = math.sqrt(2.0)
_SQ3 = math.sqrt(3.0)
_SQ6 = math.sqrt(6.0)

#: Harmonic expansions of the single-qubit basis droplets f_sigma.
_BASIS_1Q = {
    ("i",): {(0, 0): _SQ2},
    ("x",): {(1, -1): 1.0, (1, 1): -1.0},
    ("y",): {(1, -1): 1j, (1, 1): 1j},
    ("z",): {(1, 0): _SQ2},
}

_LIN_X = {(1, -1): 1.0 / _SQ2, (1, 1): -1.0 / _SQ2}
_LIN_Y = {(1, -1): 1j / _SQ2, (1, 1): 1j / _SQ2}
_LIN_Z = {(1, 0): 1.0}

#: Harmonic expansions of the two-qubit basis droplets, normalized to unit
#: function norm. Every entry is pinned by the operator-route identity (the
#: scan of the bare Pauli word must reproduce these values), which also fixes
#: all phases: droplets of Hermitian words are real-valued functions.
_BASIS_2Q = {
    ("i", "i"): {(0, 0): 1.0},
    ("x", "i"): _LIN_X,
    ("y", "i"): _LIN_Y,
    ("z", "i"): _LIN_Z,
    ("i", "x"): _LIN_X,
    ("i", "y"): _LIN_Y,
    ("i", "z"): _LIN_Z,
    ("x", "x"): {(0, 0): 1.0 / _SQ3, (2, -2): 0.5, (2, 0): -1.0 / _SQ6, (2, 2): 0.5},
    ("x", "y"): {(1, 0): 1.0 / _SQ2, (2, -2): 0.5j, (2, 2): -0.5j},
    ("x", "z"): {(1, -1): -0.5j, (1, 1): -0.5j, (2, -1): 0.5, (2, 1): -0.5},
    ("y", "x"): {(1, 0): -1.0 / _SQ2, (2, -2): 0.5j, (2, 2): -0.5j},
    ("y", "y"): {(0, 0): 1.0 / _SQ3, (2, -2): -0.5, (2, 0): -1.0 / _SQ6, (2, 2): -0.5},
    ("y", "z"): {(1, -1): 0.5, (1, 1): -0.5, (2, -1): 0.5j, (2, 1): 0.5j},
    ("z", "x"): {(1, -1): 0.5j, (1, 1): 0.5j, (2, -1): 0.5, (2, 1): -0.5},
    ("z", "y"): {(1, -1): -0.5, (1, 1): 0.5, (2, -1): 0.5j, (2, 1): 0.5j},
    ("z", "z"): {(0, 0): 1.0 / _SQ3, (2, 0): math.sqrt(2.0 / 3.0)},
}


def basis_words(n: int) -> tuple[tuple[str, ...], ...]:
    """All Pauli words of length n, in (i, x, y, z) lexicographic order."""
    if n == 1:
        return tuple(_BASIS_1Q)
    if n == 2:
        return tuple(_BASIS_2Q)
    raise ValueError(f"no basis words for n={n}")


def word_label(word: tuple[str, ...]) -> str:
    """Label of the qubit subset a Pauli word acts on."""
    active = [str(k + 1) for k, axis in enumerate(word) if axis != "i"]
    return "".join(active) if active else "e"


def basis_harmonic_coefficients(n: int, word: tuple[str, ...]) -> dict[tuple[int, int], complex]:
    table = _BASIS_1Q if n == 1 else _BASIS_2Q if n == 2 else None
    if table is None or tuple(word) not in table:
        raise ValueError(f"unsupported word {word!r} for n={n}")
    return dict(table[tuple(word)])


def evaluate_harmonics(coefficients: dict[tuple[int, int], complex],
                       beta, alpha) -> np.ndarray:
    """Evaluate sum_jm c_jm Y_jm on arrays of angles."""
    beta = np.asarray(beta, dtype=float)
    out = np.zeros(np.broadcast(beta, np.asarray(alpha)).shape, dtype=complex)
    for (j, m), c in coefficients.items():
        if c != 0:
            out = out + c * spherical_harmonic(j, m, beta, alpha)
    return out


def basis_droplet(n: int, word, grid: SamplingGrid) -> tuple[Droplet, ...]:
    """Ideal basis droplet(s) of a Pauli word, split into rank components."""
    word = tuple(word)
    coeffs = basis_harmonic_coefficients(n, word)
    label = word_label(word)
    by_rank: dict[int, dict[tuple[int, int], complex]] = {}
    for (j, m), c in coeffs.items():
        by_rank.setdefault(j, {})[(j, m)] = c
    droplets = []
    for j in sorted(by_rank):
        values = evaluate_harmonics(by_rank[j], grid.beta, grid.alpha)
        droplets.append(Droplet(DropletKey(label, j), grid, values))
    return tuple(droplets)


def basis_droplet_values(n: int, word, grid: SamplingGrid) -> np.ndarray:
    """Rank-summed basis droplet values of a Pauli word on a grid."""
    coeffs = basis_harmonic_coefficients(n, tuple(word))
    return evaluate_harmonics(coeffs, grid.beta, grid.alpha)


def harmonic_coefficients(droplet: Droplet, grid: SamplingGrid | None = None
                          ) -> dict[tuple[int, int], complex]:
    """Band-limited harmonic expansion of a droplet via the discretized scalar product."""
    grid = droplet.grid if grid is None else grid
    if grid.weights is None:
        raise ValueError("grid carries no quadrature weights")
    out = {}
    for j in range(3):
        for m in range(-j, j + 1):
            y = spherical_harmonic(j, m, grid.beta, grid.alpha)
            out[(j, m)] = complex(4.0 * math.pi
                                  * np.sum(grid.weights * np.conj(y) * droplet.values))
    return out
