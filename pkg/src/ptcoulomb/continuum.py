"""Exact continuum solutions of the PT-symmetric Coulomb equation.

The radial-type equation

    -Psi'' + L(L+1)/x^2 Psi + iZ/x Psi = E Psi,   E = -k^2,

has the two independent confluent-hypergeometric solutions

    Psi_1(x) = e^{-kx} x^{L+1} 1F1(1 + L + iZ/(2k), 2L + 2, 2kx),
    Psi_2(x) = e^{-kx} x^{-L}  1F1(-L + iZ/(2k),   -2L,    2kx),

evaluated here with principal-branch complex powers along the U-shaped
PT-symmetric contour that dips below the x = 0 singularity.  Everything is
series-based and desk-scale: the contour is kept small enough that the
Kummer series stays in its convergent regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

#: Kummer series argument bound of the implemented regime
SERIES_ARGUMENT_MAX = 30.0

#: Kummer series term cap
SERIES_MAX_TERMS = 10_000


class KummerError(RuntimeError):
    """Kummer series pole or non-convergence."""


@dataclass(frozen=True)
class ContinuumSpec:
    """Parameters of the continuum model plus a superposition choice.

    2L integer makes Psi_2 degenerate (its 1F1 hits a pole), so it is only
    admitted when the superposition never touches Psi_2.
    """

    angular: float
    z_charge: float
    k_wave: float
    superposition: Tuple[complex, complex] = (1.0 + 0j, 0.0 + 0j)

    def __post_init__(self):
        if self.angular <= -0.5:
            raise ValueError(f"angular momentum L must exceed -1/2, got {self.angular}")
        if self.k_wave <= 0:
            raise ValueError(f"k_wave must be positive, got {self.k_wave}")
        two_l = 2 * self.angular
        if abs(two_l - round(two_l)) < 1e-12 and self.superposition[1] != 0:
            raise ValueError(
                "2L is an integer, so Psi_2 is degenerate; require C2 = 0 "
                f"(got C2 = {self.superposition[1]})"
            )

    @property
    def energy(self) -> float:
        return -self.k_wave**2


@dataclass(frozen=True)
class ContourSpec:
    """Sampled PT-symmetric integration contour."""

    epsilon: float
    samples: List[Tuple[float, complex]]


def kummer_1f1(alpha: complex, beta: complex, argument: complex) -> complex:
    """Kummer's 1F1 by direct Taylor series.

    Terminates when a term drops below 1e-16 of the running sum; raises on a
    beta pole (non-positive integer) or failure to converge within the term
    cap.
    """
    beta = complex(beta)
    if abs(beta.imag) < 1e-15 and beta.real <= 0 and abs(beta.real - round(beta.real)) < 1e-12:
        raise KummerError(f"1F1 pole: beta = {beta} is a non-positive integer")
    alpha = complex(alpha)
    x = complex(argument)
    total = 1.0 + 0j
    term = 1.0 + 0j
    for n in range(1, SERIES_MAX_TERMS + 1):
        term *= (alpha + n - 1) / (beta + n - 1) * x / n
        total += term
        if abs(term) <= 1e-16 * abs(total):
            return total
    raise KummerError(
        f"1F1 series did not converge within {SERIES_MAX_TERMS} terms "
        f"(alpha={alpha}, beta={beta}, x={x})"
    )


def contour_point(epsilon: float, s: float) -> complex:
    """Point x(s) on the U-shaped PT-symmetric contour of arc radius epsilon.

    Left vertical line, lower semicircular arc through -i*epsilon, right
    vertical line; continuous at the joints s = -+ pi*epsilon/2.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    joint = 0.5 * np.pi * epsilon
    if s < -joint:
        return -1j * (s + joint) - epsilon
    if s > joint:
        return 1j * (s - joint) + epsilon
    return epsilon * np.exp(1j * (s / epsilon + 1.5 * np.pi))


def build_contour(epsilon: float, s_min: float, s_max: float, n_samples: int) -> ContourSpec:
    """Uniformly sampled contour segment in the path parameter s."""
    if n_samples < 5:
        raise ValueError(f"need at least 5 samples, got {n_samples}")
    if not s_min < s_max:
        raise ValueError(f"need s_min < s_max, got [{s_min}, {s_max}]")
    svals = np.linspace(s_min, s_max, n_samples)
    samples = [(float(s), contour_point(epsilon, s)) for s in svals]
    return ContourSpec(epsilon=float(epsilon), samples=samples)


def _principal_power(x: complex, p: float) -> complex:
    return np.exp(p * np.log(complex(x)))


def psi_solutions(spec: ContinuumSpec, x: complex) -> Tuple[complex, complex]:
    """Both independent solutions (Psi_1, Psi_2) at one complex point."""
    return psi1_value(spec, x), psi2_value(spec, x)


def _check_argument(spec: ContinuumSpec, x: complex) -> complex:
    arg = 2 * spec.k_wave * complex(x)
    if abs(arg) > SERIES_ARGUMENT_MAX:
        raise ValueError(
            f"|2kx| = {abs(arg):.3g} exceeds the series regime "
            f"({SERIES_ARGUMENT_MAX}); use a smaller contour"
        )
    return arg


def psi1_value(spec: ContinuumSpec, x: complex) -> complex:
    """Regular solution e^{-kx} x^{L+1} 1F1(1+L+iZ/(2k), 2L+2, 2kx)."""
    x = complex(x)
    if x == 0:
        raise ValueError("solutions are singular at x = 0")
    arg = _check_argument(spec, x)
    big_l, z, k = spec.angular, spec.z_charge, spec.k_wave
    f = kummer_1f1(1 + big_l + 1j * z / (2 * k), 2 * big_l + 2, arg)
    return np.exp(-k * x) * _principal_power(x, big_l + 1) * f


def psi2_value(spec: ContinuumSpec, x: complex) -> complex:
    """Second solution e^{-kx} x^{-L} 1F1(-L+iZ/(2k), -2L, 2kx)."""
    x = complex(x)
    if x == 0:
        raise ValueError("solutions are singular at x = 0")
    arg = _check_argument(spec, x)
    big_l, z, k = spec.angular, spec.z_charge, spec.k_wave
    f = kummer_1f1(-big_l + 1j * z / (2 * k), -2 * big_l, arg)
    return np.exp(-k * x) * _principal_power(x, -big_l) * f


def psi_value(spec: ContinuumSpec, x: complex) -> complex:
    """General solution C1 Psi_1 + C2 Psi_2 of the spec's superposition."""
    c1, c2 = spec.superposition
    total = 0.0 + 0j
    if c1 != 0:
        total += c1 * psi1_value(spec, x)
    if c2 != 0:
        total += c2 * psi2_value(spec, x)
    return total


def _branch_of(epsilon: float, s: float) -> int:
    """Branch index 0/1/2, or -1 for a sample at a joint.

    Joint samples sit at x = -+epsilon; the left one lies on the principal
    branch cut, so stencils touching joints are skipped.
    """
    joint = 0.5 * np.pi * epsilon
    if abs(abs(s) - joint) <= 1e-12 * max(1.0, joint):
        return -1
    if s < -joint:
        return 0
    if s > joint:
        return 2
    return 1


def ode_residual_on_contour(spec: ContinuumSpec, contour: ContourSpec) -> float:
    """Max normalized ODE residual of the superposition along the contour.

    Second derivatives in x are recovered from centered differences in the
    path parameter s via the chain rule; stencils crossing a branch joint
    are skipped because x(s) is not smooth there.  Returns 0 for the zero
    superposition.
    """
    c1, c2 = spec.superposition
    if c1 == 0 and c2 == 0:
        return 0.0
    svals = np.array([s for s, _ in contour.samples])
    if len(svals) < 5:
        raise ValueError("contour too coarse: need at least 5 samples")
    ds = np.diff(svals)
    if np.max(ds) - np.min(ds) > 1e-9 * np.max(np.abs(ds)):
        raise ValueError("contour samples must be uniform in s for 3-point stencils")
    h = float(ds[0])

    eps = contour.epsilon
    xs = np.array([x for _, x in contour.samples])
    psi = np.array([psi_value(spec, x) for x in xs])
    scale = np.max(np.abs(psi))
    if scale == 0:
        return 0.0

    big_l, z, k = spec.angular, spec.z_charge, spec.k_wave
    worst = 0.0
    for i in range(1, len(svals) - 1):
        b = _branch_of(eps, svals[i])
        if b < 0 or b != _branch_of(eps, svals[i - 1]) or b != _branch_of(eps, svals[i + 1]):
            continue
        x = xs[i]
        psi_s = (psi[i + 1] - psi[i - 1]) / (2 * h)
        psi_ss = (psi[i + 1] - 2 * psi[i] + psi[i - 1]) / (h * h)
        if b == 1:
            x_s = 1j * x / eps
            x_ss = -x / (eps * eps)
        else:
            x_s = -1j if b == 0 else 1j
            x_ss = 0.0
        psi_x = psi_s / x_s
        psi_xx = (psi_ss - psi_x * x_ss) / (x_s * x_s)
        res = -psi_xx + big_l * (big_l + 1) * psi[i] / (x * x) + 1j * z * psi[i] / x + k * k * psi[i]
        worst = max(worst, abs(res) / scale)
    return worst
