"""Shared test helpers: oracles independent of the library code paths."""

import numpy as np


def multiset_deviation(got, want) -> float:
    """Max distance under greedy nearest matching of two complex multisets."""
    got = list(np.asarray(got, dtype=complex))
    want = np.asarray(want, dtype=complex)
    assert len(got) == len(want)
    worst = 0.0
    for w in want:
        dist = [abs(g - w) for g in got]
        pick = int(np.argmin(dist))
        worst = max(worst, dist[pick])
        got.pop(pick)
    return worst


def dirichlet_laplacian_eigenvalues(n: int) -> np.ndarray:
    """Closed-form spectrum 2 - 2 cos(j pi / (n+1)) of the free lattice."""
    j = np.arange(1, n + 1)
    return 2.0 - 2.0 * np.cos(j * np.pi / (n + 1))


def brute_force_charpoly(m: np.ndarray) -> np.ndarray:
    """Characteristic polynomial by cofactor-free determinant expansion.

    Evaluates det(E I - H) at N+1 Chebyshev-like sample points by LU
    factorization and interpolates; independent of Faddeev-LeVerrier.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    pts = 2.0 + 3.0 * np.cos(np.pi * np.arange(n + 1) / n) if n > 0 else np.array([0.0])
    vals = np.array([np.linalg.det(e * np.eye(n) - m) for e in pts])
    coeffs = np.polyfit(pts, vals, n)
    return coeffs / coeffs[0]


def n_real_brute(n: int, a: float, z: float = -1.0, tol: float = 1e-9) -> int:
    """Real-eigenvalue count straight from numpy, bypassing the package."""
    j = np.arange(1, n + 1)
    d = 2.0 + 1j * a * np.sign(2 * j - n - 1) * np.abs(2 * j - n - 1) ** z
    h = np.diag(d) + np.diag(-np.ones(n - 1), 1) + np.diag(-np.ones(n - 1), -1)
    vals = np.linalg.eigvals(h)
    return int(np.sum(np.abs(vals.imag) <= tol * max(1.0, np.abs(vals).max())))
