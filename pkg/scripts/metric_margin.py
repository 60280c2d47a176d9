#!/usr/bin/env python3
"""Track the positivity margin of the biorthogonal metric toward the edge.

For couplings approaching the critical value the smallest eigenvalue of the
unit-weight metric collapses to zero; this prints the margin along a ramp of
fractions of alpha(N).

Usage: python3 scripts/metric_margin.py --n 6 [--points 12]
"""

import argparse

import numpy as np

from ptcoulomb import (
    build_coulomb_hamiltonian,
    critical_coupling,
    dieudonne_residual,
    eigensystem,
    is_positive,
    metric_from_biorthogonal,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6, help="matrix size (even)")
    ap.add_argument("--z", type=float, default=-1.0, help="potential exponent")
    ap.add_argument("--points", type=int, default=12, help="ramp sample count")
    args = ap.parse_args()

    alpha = critical_coupling(args.n, args.z, 1e-8)
    print(f"alpha({args.n}) = {alpha:.8f}")
    print(f"{'a/alpha':>8} {'a':>12} {'min_eig':>12} {'residual':>12}")
    for frac in np.linspace(0.05, 0.98, args.points):
        a = frac * alpha
        h = build_coulomb_hamiltonian(args.n, a, args.z)
        theta = metric_from_biorthogonal(eigensystem(h))
        _, smallest = is_positive(theta)
        res = dieudonne_residual(h, theta)
        print(f"{frac:>8.3f} {a:>12.8f} {smallest:>12.3e} {res:>12.3e}")


if __name__ == "__main__":
    main()
