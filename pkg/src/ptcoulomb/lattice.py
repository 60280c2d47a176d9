"""Discretized PT-symmetric Hamiltonians on a symmetric 1D lattice.

The lattice is an equidistant Dirichlet box of even dimension N with nodes
placed symmetrically around (and excluding) the origin,

    x_j = (2j - N - 1) * h / 2,   j = 1..N,   h = 2*Lambda/(N+1),

so the Coulomb-like singularity at x = 0 never sits on a node.  The
resulting matrices are tridiagonal with off-diagonals -1 and diagonal
2 + h^2 V(x_j); for the imaginary power-law potential i*a*sgn(x)|x|^z in
dimensionless form the diagonal reads

    d_j = 2 + i * a * sgn(2j-N-1) * |2j-N-1|^z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Equidistant symmetric grid excluding the origin."""

    n_points: int
    cutoff: float
    spacing: float
    nodes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))


@dataclass(frozen=True)
class LatticeHamiltonian:
    """Dense tridiagonal lattice Hamiltonian with its generating parameters."""

    matrix: np.ndarray
    coupling: float
    exponent: float
    grid: Optional[GridSpec] = None

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ParityMatrix:
    """Anti-diagonal permutation matrix; P^2 = I."""

    matrix: np.ndarray


def build_grid(n_points: int, cutoff: float) -> GridSpec:
    """Build the symmetric zero-free grid for an even number of nodes.

    Odd n_points is rejected: the center node would collide with the
    singularity at x = 0.
    """
    if n_points < 2 or n_points % 2 != 0:
        raise ValueError(
            f"n_points must be even and >= 2, got {n_points} "
            "(odd N would place a node on the x=0 singularity)"
        )
    if cutoff <= 0:
        raise ValueError(f"cutoff must be positive, got {cutoff}")
    h = 2.0 * cutoff / (n_points + 1)
    j = np.arange(1, n_points + 1)
    nodes = (2 * j - n_points - 1) * h / 2.0
    return GridSpec(n_points=n_points, cutoff=cutoff, spacing=h, nodes=nodes)


def _signed_power(j: np.ndarray, n: int, z: float) -> np.ndarray:
    # sgn(2j-N-1) * |2j-N-1|^z with 2j-N-1 odd, never zero
    m = 2 * j - n - 1
    return np.sign(m) * np.abs(m) ** float(z)


def build_coulomb_hamiltonian(
    n_points: int, coupling: float, exponent: float = -1.0
) -> LatticeHamiltonian:
    """Tridiagonal Hamiltonian with diagonal 2 + i*a*sgn(2j-N-1)|2j-N-1|^z.

    At exponent -1 this is the discrete imaginary-Coulomb matrix with
    diagonal 2 -+ i*a/(2j-1); exponent z generalizes the power law.
    """
    if n_points < 2 or n_points % 2 != 0:
        raise ValueError(f"n_points must be even and >= 2, got {n_points}")
    j = np.arange(1, n_points + 1)
    diag = 2.0 + 1j * coupling * _signed_power(j, n_points, exponent)
    m = np.diag(diag).astype(complex)
    off = np.arange(n_points - 1)
    m[off, off + 1] = -1.0
    m[off + 1, off] = -1.0
    return LatticeHamiltonian(matrix=m, coupling=float(coupling), exponent=float(exponent))


def build_general_hamiltonian(
    grid: GridSpec, potential: Callable[[float], complex]
) -> LatticeHamiltonian:
    """Tridiagonal matrix 2 + h^2 V(x_j) on the diagonal, -1 off-diagonal.

    Uses the dimensionless eigenvalue convention eps = h^2 E.  The potential
    must be finite at every node.
    """
    vals = np.empty(grid.n_points, dtype=complex)
    for idx, x in enumerate(grid.nodes):
        v = complex(potential(x))
        if not (np.isfinite(v.real) and np.isfinite(v.imag)):
            raise ValueError(
                f"potential is singular at node index {idx} (x = {x!r}): {v!r}"
            )
        vals[idx] = v
    n = grid.n_points
    m = np.diag(2.0 + grid.spacing**2 * vals).astype(complex)
    off = np.arange(n - 1)
    m[off, off + 1] = -1.0
    m[off + 1, off] = -1.0
    return LatticeHamiltonian(matrix=m, coupling=float("nan"), exponent=float("nan"), grid=grid)


def parity(n_points: int) -> ParityMatrix:
    """Parity operator: units along the secondary diagonal."""
    if n_points < 1:
        raise ValueError(f"n_points must be >= 1, got {n_points}")
    return ParityMatrix(matrix=np.fliplr(np.eye(n_points)))


def is_pt_symmetric(h: np.ndarray, tolerance: float = 0.0) -> bool:
    """True iff P conj(H) P equals H entrywise within tolerance (max norm)."""
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    p = parity(h.shape[0]).matrix
    dev = np.max(np.abs(p @ np.conj(h) @ p - h))
    return bool(dev <= tolerance)
