"""Spherical sampling grids, quadrature weights, and discretized scalar products.

Weights always sum to 1 (fraction of the sphere represented by each point);
the continuous scalar product integrates over the full solid angle 4*pi, so
discrete sums are scaled by SOLID_ANGLE to converge to the continuous value.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

__all__ = [
    "SOLID_ANGLE",
    "SamplingGrid",
    "equiangular_grid",
    "gauss_legendre_grid",
    "load_grid",
    "lebedev_110_grid",
    "parse_grid_spec",
    "discrete_scalar_product",
    "grids_compatible",
]

log = logging.getLogger(__name__)

#: The quadrature normalization constant: weights sum to 1 while the
#: continuous scalar product integrates over solid angle 4*pi.
SOLID_ANGLE = 4.0 * math.pi

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SamplingGrid:
    """Sampling points (beta, alpha) on the sphere with quadrature weights."""

    scheme: str
    beta: np.ndarray
    alpha: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        beta = np.asarray(self.beta, dtype=float)
        alpha = np.asarray(self.alpha, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        for name, arr in (("beta", beta), ("alpha", alpha), ("weights", weights)):
            object.__setattr__(self, name, arr)
            if arr.ndim != 1:
                raise ValueError(f"{name} must be one-dimensional")
        if not (len(beta) == len(alpha) == len(weights)):
            raise ValueError("points and weights must have equal length")
        if len(beta) == 0:
            raise ValueError("empty grid")
        if beta.min() < -1e-12 or beta.max() > math.pi + 1e-12:
            raise ValueError("beta outside [0, pi]")
        if alpha.min() < -1e-12 or alpha.max() > _TWO_PI + 1e-12:
            raise ValueError("alpha outside [0, 2*pi]")
        if weights.min() < 0:
            raise ValueError("negative quadrature weight")

    def __len__(self) -> int:
        return len(self.beta)

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.beta, self.alpha])


def equiangular_grid(M: int, duplicate_seam: bool = True) -> SamplingGrid:
    """Equiangular grid: (M+1) polar x 2M azimuthal angles with step pi/M.

    Weights are the exact areas (as a fraction of the sphere) of the polar
    band centered on each row, split uniformly over the azimuthal columns;
    the pole rows carry the polar-cap area. With ``duplicate_seam`` the
    azimuthal angle 2*pi is repeated (2M+1 columns) and the two seam columns
    carry half weight each, leaving the total at exactly 1.
    """
    if M < 2:
        raise ValueError("equiangular grid requires M >= 2")
    d = math.pi / M
    thetas = np.arange(M + 1) * d
    ncols = 2 * M + 1 if duplicate_seam else 2 * M
    phis = np.arange(ncols) * d

    row_w = np.empty(M + 1)
    row_w[0] = row_w[M] = (1.0 - math.cos(d / 2.0)) / (4.0 * M)
    k = np.arange(1, M)
    row_w[1:M] = (np.cos(thetas[1:M] - d / 2.0) - np.cos(thetas[1:M] + d / 2.0)) / (4.0 * M)

    w = np.repeat(row_w[:, None], ncols, axis=1)
    if duplicate_seam:
        w[:, 0] *= 0.5
        w[:, -1] *= 0.5
    beta, alpha = np.meshgrid(thetas, phis, indexing="ij")
    seam = "seam" if duplicate_seam else "noseam"
    return SamplingGrid(f"equiangular:M={M}:{seam}",
                        beta.ravel(), alpha.ravel(), w.ravel())


def gauss_legendre_grid(n_polar: int, n_azimuthal: int) -> SamplingGrid:
    """Gauss-Legendre (polar) x uniform (azimuthal) product grid.

    Exact for integrands of polar polynomial degree <= 2*n_polar - 1 and
    azimuthal order < n_azimuthal; used as a quadrature-exact reference for
    band-limited droplet products.
    """
    if n_polar < 1 or n_azimuthal < 1:
        raise ValueError("grid sizes must be positive")
    x, wx = np.polynomial.legendre.leggauss(n_polar)
    beta = np.arccos(x)
    alpha = np.arange(n_azimuthal) * _TWO_PI / n_azimuthal
    b, a = np.meshgrid(beta, alpha, indexing="ij")
    w = np.repeat(wx[:, None], n_azimuthal, axis=1) / (2.0 * n_azimuthal)
    return SamplingGrid(f"gauss-legendre:{n_polar}x{n_azimuthal}",
                        b.ravel(), a.ravel(), w.ravel())


def load_grid(source, name: str | None = None) -> SamplingGrid:
    """Read an imported grid from a text file: one `beta alpha weight` per line.

    Angles are radians; `#` starts a comment. If every line has exactly two
    columns the weights fall back to the equal-weight rule with a logged
    warning; a weight column missing from only some lines is an error. The
    weight sum is normalized to 1 on load, logging the scale factor.
    """
    if hasattr(source, "read"):
        text = source.read()
        label = name or "stream"
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
        label = name or str(source)

    rows: list[tuple[int, list[float]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [float(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"{label}:{lineno}: cannot parse {raw!r}") from exc
        if len(values) not in (2, 3):
            raise ValueError(f"{label}:{lineno}: expected 2 or 3 columns, got {len(values)}")
        rows.append((lineno, values))

    if not rows:
        raise ValueError(f"{label}: empty grid file")
    ncols = {len(values) for _, values in rows}
    if ncols == {2}:
        log.warning("%s: no weight column; falling back to equal weights", label)
        data = np.array([values for _, values in rows])
        beta, alpha = data.T
        weights = np.full(len(rows), 1.0 / len(rows))
    elif ncols == {3}:
        data = np.array([values for _, values in rows])
        beta, alpha, weights = data.T
        for (lineno, values) in rows:
            if values[2] < 0:
                raise ValueError(f"{label}:{lineno}: negative weight {values[2]}")
    else:
        bad = next(lineno for lineno, values in rows if len(values) == 2)
        raise ValueError(f"{label}:{bad}: missing weight column")

    total = weights.sum()
    if total <= 0:
        raise ValueError(f"{label}: weights sum to {total}")
    if abs(total - 1.0) > 1e-12:
        log.info("%s: normalizing weight sum %.12g to 1", label, total)
        weights = weights / total
    return SamplingGrid(f"imported:{name or label}", beta, alpha, weights)


def lebedev_110_grid() -> SamplingGrid:
    """The packaged Lebedev order-17 grid (110 points, octahedral symmetry)."""
    ref = resources.files("dropscan").joinpath("data/lebedev_110.txt")
    with ref.open("r", encoding="utf-8") as fh:
        return load_grid(fh, name="lebedev_110")


def parse_grid_spec(spec: str) -> SamplingGrid:
    """Build a grid from a CLI spec.

    Accepted forms: ``equiangular:M=7`` (append ``:noseam`` to drop the
    duplicated seam column), ``file:<path>``, ``lebedev110``, and
    ``gauss-legendre:<polar>x<azimuthal>``.
    """
    spec = spec.strip()
    if spec.startswith("equiangular:"):
        parts = spec.split(":")[1:]
        if not parts or not parts[0].startswith("M="):
            raise ValueError(f"bad equiangular spec {spec!r}; expected equiangular:M=<int>")
        m = int(parts[0][2:])
        duplicate_seam = "noseam" not in parts[1:]
        return equiangular_grid(m, duplicate_seam=duplicate_seam)
    if spec.startswith("file:"):
        return load_grid(spec[5:])
    if spec == "lebedev110":
        return lebedev_110_grid()
    if spec.startswith("gauss-legendre:"):
        size = spec.split(":", 1)[1]
        npolar, naz = (int(t) for t in size.split("x"))
        return gauss_legendre_grid(npolar, naz)
    raise ValueError(f"unknown grid spec {spec!r}")


def grids_compatible(a: SamplingGrid, b: SamplingGrid) -> bool:
    if a is b:
        return True
    return (len(a) == len(b)
            and np.array_equal(a.beta, b.beta)
            and np.array_equal(a.alpha, b.alpha)
            and np.array_equal(a.weights, b.weights))


def _values_and_grid(f, grid: SamplingGrid | None):
    if hasattr(f, "values") and hasattr(f, "grid"):
        return np.asarray(f.values), f.grid
    if grid is None:
        raise ValueError("raw value arrays need an explicit grid")
    return np.asarray(f), grid


def discrete_scalar_product(fa, fb, grid: SamplingGrid | None = None) -> complex:
    """Discretized scalar product of two droplets on a common grid.

    Computes SOLID_ANGLE * sum_i w_i conj(fa_i) fb_i, which converges to the
    continuous surface integral of conj(fa) fb for dense grids.
    """
    va, ga = _values_and_grid(fa, grid)
    vb, gb = _values_and_grid(fb, grid)
    if not grids_compatible(ga, gb):
        raise ValueError("droplets live on different grids")
    if va.shape != vb.shape or va.shape != ga.weights.shape:
        raise ValueError("value arrays do not match the grid size")
    return complex(SOLID_ANGLE * np.sum(ga.weights * np.conj(va) * vb))
