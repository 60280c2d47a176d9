"""Reality domains, exceptional points, and spectral-locus sweeps.

The coupling ``a`` of the lattice Hamiltonian controls how many eigenvalues
stay real: the whole spectrum is real for |a| < alpha(N), and pairs of real
eigenvalues merge and complexify at a finite set of exceptional points as
|a| grows.  Because of the up-down symmetry eps -> 4 - conj(eps), mergers
happen in mirrored pairs; at N=4 the bottom and top mergers coincide at the
same coupling, so the spectrum jumps from fully real to fully complex there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .eigensolve import eigenvalues
from .lattice import LatticeHamiltonian, build_coulomb_hamiltonian

#: number of uniform samples in the initial exceptional-point scan
EP_SCAN_SAMPLES = 512

#: upper edge of the default bisection bracket for the critical coupling
CRITICAL_BRACKET = 2.0

#: hard cap for bracket auto-expansion
CRITICAL_BRACKET_MAX = 64.0


@dataclass(frozen=True)
class RealityReport:
    """Count of real eigenvalues of one Hamiltonian at one coupling."""

    coupling: float
    n_real: int
    fully_real: bool
    fully_complex: bool


@dataclass(frozen=True)
class SweepTable:
    """Eigenvalue loci over a coupling range, continuity-ordered per column.

    ``eigenvalues[i, j]`` is the j-th locus at coupling ``couplings[i]``;
    columns are matched row-to-row by nearest-neighbor pairing so each
    column traces a continuous curve in the complex plane.
    """

    couplings: np.ndarray
    eigenvalues: np.ndarray
    n_real: np.ndarray


def closed_form_spectrum_n4(coupling: float) -> np.ndarray:
    """The four N=4 Coulomb eigenvalues in closed form (principal branches).

    eps(a) = 2 +- (1/6) sqrt(54 - 20 a^2 +- 2 sqrt(405 - 720 a^2 + 64 a^4))
    """
    a2 = complex(coupling) ** 2
    inner = np.sqrt(405 - 720 * a2 + 64 * a2 * a2 + 0j)
    vals = [
        2 + s1 * np.sqrt(54 - 20 * a2 + s2 * 2 * inner) / 6
        for s1 in (+1, -1)
        for s2 in (+1, -1)
    ]
    vals = np.array(vals, dtype=complex)
    return vals[np.lexsort((vals.imag, vals.real))]


def secular_coefficients_n4(coupling: float) -> np.ndarray:
    """Printed quartic secular coefficients of the N=4 Coulomb matrix.

    det(E I - H) = E^4 - 8 E^3 + (21 + 10/9 a^2) E^2
                   - (40/9 a^2 + 20) E + 5 + a^4/9 + 5 a^2.
    """
    a2 = float(coupling) ** 2
    return np.array(
        [1.0, -8.0, 21.0 + 10.0 / 9.0 * a2, -40.0 / 9.0 * a2 - 20.0,
         5.0 + a2 * a2 / 9.0 + 5.0 * a2]
    )


def secular_coefficients_n6(coupling: float) -> np.ndarray:
    """Printed sextic secular coefficients of the N=6 Coulomb matrix."""
    a2 = float(coupling) ** 2
    a4, a6 = a2 * a2, a2 * a2 * a2
    return np.array(
        [
            1.0,
            -12.0,
            55.0 + 259.0 / 225.0 * a2,
            -120.0 - 2072.0 / 225.0 * a2,
            126.0 + 5894.0 / 225.0 * a2 + 7.0 / 45.0 * a4,
            -56.0 - 280.0 / 9.0 * a2 - 28.0 / 45.0 * a4,
            7.0 + 14.0 * a2 + 7.0 / 9.0 * a4 + a6 / 225.0,
        ]
    )


def reality_report(h, tolerance: Optional[float] = None) -> RealityReport:
    """Classify the spectrum of a Hamiltonian by its number of real eigenvalues."""
    coupling = h.coupling if isinstance(h, LatticeHamiltonian) else float("nan")
    spec = eigenvalues(h, classification_tolerance=tolerance)
    n_real = spec.n_real
    return RealityReport(
        coupling=coupling,
        n_real=n_real,
        fully_real=n_real == len(spec.eigenvalues),
        fully_complex=n_real == 0,
    )


def _n_real(n_points: int, exponent: float, coupling: float) -> int:
    h = build_coulomb_hamiltonian(n_points, coupling, exponent)
    return eigenvalues(h).n_real


def critical_coupling(
    n_points: int, exponent: float = -1.0, tolerance: float = 1e-8
) -> float:
    """Edge alpha(N) of the reality interval, located by bisection on a.

    The predicate "spectrum fully real" is scanned on an initial grid to
    confirm it is a prefix of the bracket (true up to the edge, false
    beyond); non-monotone scans raise with the offending subinterval.
    Returns the lower (certified fully-real) edge of the final bracket.
    """
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    n = n_points

    def fully_real(a: float) -> bool:
        return _n_real(n, exponent, a) == n

    hi = CRITICAL_BRACKET
    while fully_real(hi):
        hi *= 2.0
        if hi > CRITICAL_BRACKET_MAX:
            raise RuntimeError(
                f"spectrum still fully real at a = {hi / 2}; no critical coupling "
                f"below {CRITICAL_BRACKET_MAX}"
            )

    # monotonicity scan: the predicate must flip exactly once
    grid = np.linspace(0.0, hi, 65)
    values = [fully_real(a) for a in grid]
    flips = [k for k in range(len(values) - 1) if values[k] != values[k + 1]]
    if len(flips) != 1 or not values[0]:
        bad = flips[1] if len(flips) > 1 else 0
        raise RuntimeError(
            "fully-real predicate is not monotone on the scan grid; offending "
            f"subinterval [{grid[bad]}, {grid[bad + 1]}]"
        )

    lo, hi = grid[flips[0]], grid[flips[0] + 1]
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if fully_real(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _bisect_drop(n_points, exponent, lo, hi, count_lo, tolerance) -> float:
    # locate where n_real first falls below count_lo
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if _n_real(n_points, exponent, mid) >= count_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def exceptional_points(
    n_points: int,
    exponent: float = -1.0,
    a_max: float = 3.0,
    tolerance: float = 1e-6,
) -> List[float]:
    """Couplings where pairs of real eigenvalues merge and complexify.

    An upward scan of n_real over [0, a_max] is refined by bisection at
    every drop.  A drop of 2k at a single coupling (the up-down-mirrored
    simultaneous merger) is reported as k coincident exceptional points,
    so the returned list always carries one entry per complexified pair.
    """
    if a_max <= 0:
        raise ValueError(f"a_max must be positive, got {a_max}")
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")

    points: List[float] = []

    def process(lo: float, hi: float, c_lo: int, c_hi: int) -> None:
        drop = c_lo - c_hi
        if drop <= 0:
            if drop < 0:
                raise RuntimeError(
                    f"n_real increased on [{lo}, {hi}]; non-monotone count"
                )
            return
        if drop == 2 or hi - lo <= tolerance:
            a_star = _bisect_drop(n_points, exponent, lo, hi, c_lo, tolerance)
            points.extend([a_star] * (drop // 2))
            return
        # drop > 2 over a resolvable interval: refine to try to split it
        sub = np.linspace(lo, hi, 9)
        counts = [c_lo] + [_n_real(n_points, exponent, a) for a in sub[1:-1]] + [c_hi]
        for k in range(8):
            process(sub[k], sub[k + 1], counts[k], counts[k + 1])

    grid = np.linspace(0.0, a_max, EP_SCAN_SAMPLES + 1)
    counts = [_n_real(n_points, exponent, a) for a in grid]
    for k in range(EP_SCAN_SAMPLES):
        process(grid[k], grid[k + 1], counts[k], counts[k + 1])
    return sorted(points)


def sweep(
    n_points: int,
    exponent: float,
    a_min: float,
    a_max: float,
    steps: int,
) -> SweepTable:
    """Eigenvalue loci on a uniform coupling grid, continuity-ordered.

    Greedy nearest-neighbor matching between consecutive rows keeps each
    column on one locus; adequate away from exceptional points.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if not a_min < a_max:
        raise ValueError(f"need a_min < a_max, got [{a_min}, {a_max}]")
    couplings = np.linspace(a_min, a_max, steps)
    table = np.empty((steps, n_points), dtype=complex)
    n_real = np.empty(steps, dtype=int)
    prev = None
    for i, a in enumerate(couplings):
        spec = eigenvalues(build_coulomb_hamiltonian(n_points, a, exponent))
        vals = spec.eigenvalues
        if prev is None:
            row = vals
        else:
            row = np.empty_like(vals)
            used = np.zeros(n_points, dtype=bool)
            for j in range(n_points):
                dist = np.abs(vals - prev[j])
                dist[used] = np.inf
                pick = int(np.argmin(dist))
                row[j] = vals[pick]
                used[pick] = True
        table[i] = row
        prev = row
        n_real[i] = spec.n_real
    return SweepTable(couplings=couplings, eigenvalues=table, n_real=n_real)
