#!/usr/bin/env python3
"""Trace the eigenvalue loci of the lattice Hamiltonian over a coupling sweep.

Writes a CSV (coupling, one re/im column pair per eigenvalue branch, real
count) suitable for plotting the successive complexification of level pairs.

Usage: python3 scripts/spectral_locus.py --n 8 --a-max 1.0 --steps 201 --out locus.csv
"""

import argparse
import csv
import sys

from ptcoulomb import sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8, help="matrix size (even)")
    ap.add_argument("--z", type=float, default=-1.0, help="potential exponent")
    ap.add_argument("--a-min", type=float, default=0.0)
    ap.add_argument("--a-max", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=201)
    ap.add_argument("--out", default=None, help="CSV destination (default stdout)")
    args = ap.parse_args()

    table = sweep(args.n, args.z, args.a_min, args.a_max, args.steps)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(fh)
    header = ["a"]
    for j in range(args.n):
        header += [f"eps{j + 1}_re", f"eps{j + 1}_im"]
    header.append("n_real")
    writer.writerow(header)
    for i, a in enumerate(table.couplings):
        row = [f"{a:.12g}"]
        for e in table.eigenvalues[i]:
            row += [f"{e.real:.12g}", f"{e.imag:.12g}"]
        row.append(int(table.n_real[i]))
        writer.writerow(row)
    if args.out:
        fh.close()
        print(f"wrote {args.steps} rows to {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
