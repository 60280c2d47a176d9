"""Command-line front end emitting machine-readable tables and check reports.

Every capability of the package is reachable as a subcommand; output goes to
stdout or --out as CSV (header row, '.' decimal separator) or JSON (top-level
object {command, params, results, checks}).  Numbers are printed with 12
significant digits and runs are fully deterministic.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import continuum, eigensolve, lattice, metrics, spectra

FMT = "{:.12g}"


def _num(x) -> str:
    return FMT.format(float(x))


def _jnum(x):
    # round-trip-stable 12-significant-digit float for JSON output
    return float(FMT.format(float(x)))


class _Output:
    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params
        self.header: List[str] = []
        self.rows: List[list] = []
        self.checks: List[dict] = []

    def set_table(self, header, rows):
        self.header = list(header)
        self.rows = [list(r) for r in rows]

    def add_check(self, name: str, passed: bool, measured, expected, tol) -> bool:
        self.checks.append(
            {
                "name": name,
                "passed": bool(passed),
                "measured": measured,
                "expected": expected,
                "tolerance": tol,
            }
        )
        return bool(passed)

    def render_csv(self) -> str:
        lines = []
        if self.header:
            lines.append(",".join(self.header))
            for row in self.rows:
                lines.append(",".join(_cell(c) for c in row))
        for chk in self.checks:
            status = "PASS" if chk["passed"] else "FAIL"
            lines.append(
                f"# {status} {chk['name']}: measured={_cell(chk['measured'])} "
                f"expected={_cell(chk['expected'])} tol={_cell(chk['tolerance'])}"
            )
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        def convert(v):
            if isinstance(v, (bool, np.bool_)):
                return bool(v)
            if isinstance(v, (int, np.integer)):
                return int(v)
            if isinstance(v, (float, np.floating)):
                return _jnum(v)
            return v

        doc = {
            "command": self.command,
            "params": {k: convert(v) for k, v in self.params.items()},
            "results": {
                "header": self.header,
                "rows": [[convert(c) for c in row] for row in self.rows],
            },
            "checks": [
                {k: convert(v) for k, v in chk.items()} for chk in self.checks
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def emit(self, fmt: str, out: Optional[str]) -> None:
        text = self.render_json() if fmt == "json" else self.render_csv()
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    @property
    def all_passed(self) -> bool:
        return all(c["passed"] for c in self.checks)


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _num(v)
    return str(v)


def _matrix_rows(m: np.ndarray):
    rows = []
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            rows.append([i + 1, j + 1, m[i, j].real, m[i, j].imag])
    return rows


# ---------------------------------------------------------------- commands


def _cmd_hamiltonian(args, out: _Output) -> int:
    h = lattice.build_coulomb_hamiltonian(args.n, args.a, args.z)
    out.set_table(["i", "j", "re", "im"], _matrix_rows(h.matrix))
    return 0


def _cmd_spectrum(args, out: _Output) -> int:
    h = lattice.build_coulomb_hamiltonian(args.n, args.a, args.z)
    spec = eigensolve.eigenvalues(h, classification_tolerance=args.tol)
    rows = [
        [k + 1, e.real, e.imag, bool(f)]
        for k, (e, f) in enumerate(zip(spec.eigenvalues, spec.real_flags))
    ]
    out.set_table(["index", "re", "im", "real_flag"], rows)
    return 0


def _cmd_sweep(args, out: _Output) -> int:
    table = spectra.sweep(args.n, args.z, args.a_min, args.a_max, args.steps)
    header = ["a"]
    for j in range(args.n):
        header += [f"eps{j + 1}_re", f"eps{j + 1}_im"]
    header.append("n_real")
    rows = []
    for i, a in enumerate(table.couplings):
        row = [float(a)]
        for e in table.eigenvalues[i]:
            row += [e.real, e.imag]
        row.append(int(table.n_real[i]))
        rows.append(row)
    out.set_table(header, rows)
    return 0


def _cmd_critical(args, out: _Output) -> int:
    alpha = spectra.critical_coupling(args.n, args.z, args.tol)
    out.set_table(["alpha", "tolerance"], [[alpha, args.tol]])
    return 0


def _cmd_eps(args, out: _Output) -> int:
    pts = spectra.exceptional_points(args.n, args.z, args.a_max, args.tol)
    out.set_table(["index", "a"], [[k + 1, a] for k, a in enumerate(pts)])
    return 0


def _cmd_metric(args, out: _Output) -> int:
    h = lattice.build_coulomb_hamiltonian(args.n, args.a, args.z)
    system = eigensolve.eigensystem(h)
    weights = None
    if args.kappa:
        vals = [float(v) for v in args.kappa.split(",")]
        weights = metrics.KappaWeights(np.array(vals))
    theta = metrics.metric_from_biorthogonal(system, weights)
    out.set_table(["i", "j", "re", "im"], _matrix_rows(theta.matrix))
    herm = float(np.max(np.abs(theta.matrix - theta.matrix.conj().T)))
    res = metrics.dieudonne_residual(h, theta)
    pos, smallest = metrics.is_positive(theta)
    ok = True
    ok &= out.add_check("hermiticity_error", herm <= 1e-12, herm, 0.0, 1e-12)
    ok &= out.add_check("dieudonne_residual", res <= 1e-10, res, 0.0, 1e-10)
    ok &= out.add_check("positive_definite", pos, smallest, "> 0", None)
    return 0 if ok else 1


def _cmd_observable(args, out: _Output) -> int:
    obs = metrics.n2_observable(args.D, args.b, args.c, args.g, args.a, args.m)
    out.set_table(["i", "j", "re", "im"], _matrix_rows(obs.matrix))
    theta = metrics.n2_metric(1.0, args.m, args.a)
    lam, tm = obs.matrix, theta.matrix
    res = float(np.linalg.norm(lam.conj().T @ tm - tm @ lam))
    out.add_check("crypto_hermiticity_residual", res <= 1e-12, res, 0.0, 1e-12)
    return 0 if res <= 1e-12 else 1


def _cmd_continuum_check(args, out: _Output) -> int:
    spec = continuum.ContinuumSpec(
        angular=args.L, z_charge=args.Z, k_wave=args.k, superposition=(1.0, 0.0)
    )
    eps = args.epsilon
    joint = 0.5 * np.pi * eps
    ok = True
    for s in (-joint, joint):
        lo = continuum.contour_point(eps, s - 1e-12)
        hi = continuum.contour_point(eps, s + 1e-12)
        gap = abs(hi - lo)
        ok &= out.add_check(f"joint_continuity_s={_num(s)}", gap <= 1e-10, gap, 0.0, 1e-10)
    span = 2.0 * joint
    coarse = continuum.build_contour(eps, -joint - span, joint + span, 801)
    fine = continuum.build_contour(eps, -joint - span, joint + span, 1601)
    r_coarse = continuum.ode_residual_on_contour(spec, coarse)
    r_fine = continuum.ode_residual_on_contour(spec, fine)
    ratio = r_coarse / r_fine if r_fine > 0 else float("inf")
    ok &= out.add_check("residual_fine", r_fine < r_coarse, r_fine, f"< {r_coarse}", None)
    ok &= out.add_check("convergence_ratio", ratio > 2.5, ratio, "~4 (second order)", None)
    return 0 if ok else 1


# ---------------------------------------------------------------- verify


def _multiset_deviation(got: np.ndarray, want: np.ndarray) -> float:
    # greedy nearest matching; robust against tie-order of conjugate pairs
    got = list(np.asarray(got, dtype=complex))
    worst = 0.0
    for w in np.asarray(want, dtype=complex):
        dist = [abs(g - w) for g in got]
        pick = int(np.argmin(dist))
        worst = max(worst, dist[pick])
        got.pop(pick)
    return float(worst)


def _verify_paper_n4(out: _Output) -> None:
    for a in (0.0, 1.0 / 3.0, 0.5, 1.0):
        h = lattice.build_coulomb_hamiltonian(4, a, -1.0)
        got = eigensolve.characteristic_polynomial(h)
        want = spectra.secular_coefficients_n4(a)
        err = float(np.max(np.abs(got - want)))
        out.add_check(f"quartic_coefficients_a={_num(a)}", err <= 1e-12, err, 0.0, 1e-12)
    worst = 0.0
    for a in np.linspace(0.0, 2.0, 50):
        want = spectra.closed_form_spectrum_n4(a)
        got = eigensolve.eigenvalues(
            lattice.build_coulomb_hamiltonian(4, a, -1.0)
        ).eigenvalues
        worst = max(worst, _multiset_deviation(got, want))
    out.add_check("closed_form_spectrum_max_dev", worst <= 1e-9, worst, 0.0, 1e-9)
    alpha = spectra.critical_coupling(4, -1.0, 1e-8)
    ref = 0.75 * np.sqrt(10.0 - 4.0 * np.sqrt(5.0))
    out.add_check("critical_coupling_n4", abs(alpha - ref) <= 1e-7, alpha, ref, 1e-7)


def _verify_paper_n6(out: _Output) -> None:
    for a in (0.0, 1.0 / 3.0, 0.5):
        h = lattice.build_coulomb_hamiltonian(6, a, -1.0)
        got = eigensolve.characteristic_polynomial(h)
        want = spectra.secular_coefficients_n6(a)
        err = float(np.max(np.abs(got - want)))
        out.add_check(f"sextic_coefficients_a={_num(a)}", err <= 1e-11, err, 0.0, 1e-11)
    alpha = spectra.critical_coupling(6, -1.0, 1e-6)
    out.add_check("critical_coupling_n6", abs(alpha - 0.589586) <= 1e-4, alpha, 0.589586, 1e-4)


def _verify_metrics_n2(out: _Output) -> None:
    rng = np.random.default_rng(20120523)
    worst_eig = worst_res = 0.0
    for _ in range(20):
        k = rng.uniform(0.2, 3.0)
        m = rng.uniform(-2.0, 2.0)
        a = rng.uniform(-2.0, 2.0)
        theta = metrics.n2_metric(k, m, a)
        got = np.sort(np.linalg.eigvalsh(theta.matrix))
        root = np.sqrt(k * k * m * m + k * k * a * a)
        want = np.sort([k - root, k + root])
        worst_eig = max(worst_eig, float(np.max(np.abs(got - want))))
        h = lattice.build_coulomb_hamiltonian(2, a, -1.0)
        worst_res = max(worst_res, metrics.dieudonne_residual(h, theta))
    out.add_check("n2_eigenvalue_formula", worst_eig <= 1e-12, worst_eig, 0.0, 1e-12)
    out.add_check("n2_family_dieudonne", worst_res <= 1e-14, worst_res, 0.0, 1e-14)
    dim = metrics.dieudonne_solution_dimension(
        lattice.build_coulomb_hamiltonian(2, 0.5, -1.0)
    )
    out.add_check("n2_solution_dimension", dim == 2, dim, 2, None)
    for a in (0.0, 0.3, 0.6, 0.9):
        c, _k = metrics.cpt_charge_n2(a)
        invol = float(np.max(np.abs(c @ c - np.eye(2))))
        theta_cpt = c @ lattice.parity(2).matrix
        h = lattice.build_coulomb_hamiltonian(2, a, -1.0)
        res = metrics.dieudonne_residual(h, theta_cpt)
        out.add_check(f"cpt_involution_a={_num(a)}", invol <= 1e-14, invol, 0.0, 1e-14)
        out.add_check(f"cpt_metric_dieudonne_a={_num(a)}", res <= 1e-14, res, 0.0, 1e-14)
    a = 0.7
    obs = metrics.n2_observable(2.0, 0.0, 0.0, -a, a)
    h = lattice.build_coulomb_hamiltonian(2, a, -1.0)
    dev = float(np.max(np.abs(obs.matrix - h.matrix)))
    out.add_check("observable_reproduces_hamiltonian", dev == 0.0, dev, 0.0, 0.0)


def _verify_metrics_n4(out: _Output) -> None:
    for a in (0.2, 0.4):
        for z in (-1.0, -0.8):
            theta = metrics.n4_metric_ansatz(1.0, 0.0, 1.0, 0.0, a, z)
            got = np.sort(np.linalg.eigvalsh(theta.matrix))
            want = metrics.n4_metric_eigenvalues(a, z)
            err = float(np.max(np.abs(got - want)))
            out.add_check(
                f"n4_theta_eigenvalues_a={_num(a)}_z={_num(z)}",
                err <= 1e-10, err, 0.0, 1e-10,
            )
            h = lattice.build_coulomb_hamiltonian(4, a, z)
            res = metrics.dieudonne_residual(h, theta)
            out.add_check(
                f"n4_ansatz_dieudonne_a={_num(a)}_z={_num(z)}",
                res <= 1e-12, res, 0.0, 1e-12,
            )


def _verify_continuum(out: _Output) -> None:
    k = 0.5
    spec = continuum.ContinuumSpec(angular=0.0, z_charge=0.0, k_wave=k)
    worst = 0.0
    for x in np.linspace(0.1, 3.0, 25):
        psi = continuum.psi1_value(spec, x)
        worst = max(worst, abs(psi - np.sinh(k * x) / k))
    out.add_check("psi1_sinh_identity", worst <= 1e-12, worst, 0.0, 1e-12)
    eps = 1.0
    joint = 0.5 * np.pi * eps
    gap = max(
        abs(continuum.contour_point(eps, j + 1e-13) - continuum.contour_point(eps, j - 1e-13))
        for j in (-joint, joint)
    )
    out.add_check("contour_joint_continuity", gap <= 1e-12, gap, 0.0, 1e-12)
    gen = continuum.ContinuumSpec(angular=0.25, z_charge=1.0, k_wave=0.5)
    coarse = continuum.build_contour(eps, -2 * joint, 2 * joint, 801)
    fine = continuum.build_contour(eps, -2 * joint, 2 * joint, 1601)
    r_c = continuum.ode_residual_on_contour(gen, coarse)
    r_f = continuum.ode_residual_on_contour(gen, fine)
    ratio = r_c / r_f if r_f > 0 else float("inf")
    out.add_check("ode_residual_second_order", ratio > 2.5, ratio, "~4", None)


_SUITES = {
    "paper-n4": _verify_paper_n4,
    "paper-n6": _verify_paper_n6,
    "metrics-n2": _verify_metrics_n2,
    "metrics-n4": _verify_metrics_n4,
    "continuum": _verify_continuum,
}


def _cmd_verify(args, out: _Output) -> int:
    _SUITES[args.suite](out)
    for chk in out.checks:
        status = "PASS" if chk["passed"] else "FAIL"
        sys.stdout.write(
            f"{status} {chk['name']}: measured={_cell(chk['measured'])} "
            f"expected={_cell(chk['expected'])}\n"
        )
    return 0 if out.all_passed else 1


# ---------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ptcoulomb",
        description="Discrete PT-symmetric Coulomb Hamiltonians: spectra, "
        "exceptional points, and Hermitizing metrics.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("hamiltonian", help="emit the lattice Hamiltonian matrix")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    common(sp)
    sp.set_defaults(func=_cmd_hamiltonian)

    sp = sub.add_parser("spectrum", help="eigenvalues with reality flags")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    sp.add_argument("--tol", type=float, default=None)
    common(sp)
    sp.set_defaults(func=_cmd_spectrum)

    sp = sub.add_parser("sweep", help="eigenvalue loci over a coupling range")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    sp.add_argument("--a-min", type=float, required=True)
    sp.add_argument("--a-max", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("critical", help="edge of the fully-real coupling interval")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    sp.add_argument("--tol", type=float, default=1e-8)
    common(sp)
    sp.set_defaults(func=_cmd_critical)

    sp = sub.add_parser("eps", help="exceptional points of the coupling")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    sp.add_argument("--a-max", type=float, default=3.0)
    sp.add_argument("--tol", type=float, default=1e-6)
    common(sp)
    sp.set_defaults(func=_cmd_eps)

    sp = sub.add_parser("metric", help="biorthogonal metric with diagnostics")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--z", type=float, default=-1.0)
    sp.add_argument("--kappa", default=None, help="comma list of positive weights")
    common(sp)
    sp.set_defaults(func=_cmd_metric)

    sp = sub.add_parser("observable", help="admissible N=2 observable")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--D", type=float, required=True)
    sp.add_argument("--b", type=float, default=0.0)
    sp.add_argument("--c", type=float, default=0.0)
    sp.add_argument("--g", type=float, default=0.0)
    sp.add_argument("--m", type=float, default=0.0)
    common(sp)
    sp.set_defaults(func=_cmd_observable)

    sp = sub.add_parser("continuum-check", help="continuum solution diagnostics")
    sp.add_argument("--epsilon", type=float, default=1.0)
    sp.add_argument("--L", type=float, default=0.25)
    sp.add_argument("--Z", type=float, default=1.0)
    sp.add_argument("--k", type=float, default=0.5)
    common(sp)
    sp.set_defaults(func=_cmd_continuum_check)

    sp = sub.add_parser("verify", help="run a named acceptance subset")
    sp.add_argument("suite", choices=sorted(_SUITES))
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "out", "format") and v is not None
    }
    out = _Output(args.command, params)
    try:
        code = args.func(args, out)
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    if args.command != "verify":
        out.emit(args.format, args.out)
    elif args.out or args.format == "json":
        out.emit(args.format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
