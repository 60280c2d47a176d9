"""Discrete PT-symmetric Coulomb-family Hamiltonians at desk scale.

Builds tridiagonal lattice Hamiltonians with imaginary power-law potentials,
computes their complex spectra and biorthogonal eigensystems, locates the
exceptional points of the coupling parameter, and constructs/validates the
Hermitizing metrics that restore a physical inner product.
"""

from .lattice import (
    GridSpec,
    LatticeHamiltonian,
    ParityMatrix,
    build_grid,
    build_coulomb_hamiltonian,
    build_general_hamiltonian,
    parity,
    is_pt_symmetric,
)
from .eigensolve import (
    Spectrum,
    EigenSystem,
    DegenerateSpectrumError,
    EigensolverError,
    eigenvalues,
    eigensystem,
    characteristic_polynomial,
)
from .spectra import (
    RealityReport,
    SweepTable,
    closed_form_spectrum_n4,
    secular_coefficients_n4,
    secular_coefficients_n6,
    reality_report,
    critical_coupling,
    exceptional_points,
    sweep,
)
from .metrics import (
    MetricCandidate,
    KappaWeights,
    ObservableCandidate,
    ComplexSpectrumError,
    dieudonne_residual,
    metric_from_biorthogonal,
    is_positive,
    n2_metric,
    n2_metric_angles,
    cpt_charge_n2,
    n2_observable,
    n4_metric_ansatz,
    n4_metric_eigenvalues,
    band_width,
    s_inner_product,
    dieudonne_solution_dimension,
)
from .continuum import (
    ContinuumSpec,
    ContourSpec,
    KummerError,
    kummer_1f1,
    contour_point,
    build_contour,
    psi_solutions,
    psi_value,
    psi1_value,
    psi2_value,
    ode_residual_on_contour,
)

__version__ = "0.1.0"
