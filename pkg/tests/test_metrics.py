import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptcoulomb import (
    ComplexSpectrumError,
    KappaWeights,
    band_width,
    build_coulomb_hamiltonian,
    cpt_charge_n2,
    dieudonne_residual,
    dieudonne_solution_dimension,
    eigensystem,
    is_positive,
    metric_from_biorthogonal,
    n2_metric,
    n2_metric_angles,
    n2_observable,
    n4_metric_ansatz,
    n4_metric_eigenvalues,
    parity,
    s_inner_product,
)

finite = dict(allow_nan=False, allow_infinity=False)
params = st.floats(min_value=-2.0, max_value=2.0, **finite)
pos_params = st.floats(min_value=0.1, max_value=3.0, **finite)


class TestDieudonneResidual:
    @given(k=pos_params, m=params, a=params)
    @settings(max_examples=50)
    def test_n2_family_solves(self, k, m, a):
        h = build_coulomb_hamiltonian(2, a, -1.0)
        assert dieudonne_residual(h, n2_metric(k, m, a)) <= 1e-14

    def test_hermitian_with_identity(self):
        m = 2 * np.eye(4) - np.eye(4, k=1) - np.eye(4, k=-1)
        assert dieudonne_residual(m, np.eye(4)) == 0.0

    def test_nonhermitian_with_identity_positive(self):
        h = build_coulomb_hamiltonian(4, 0.5, -1.0)
        assert dieudonne_residual(h, np.eye(4)) > 1e-3

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            dieudonne_residual(np.eye(2), np.eye(3))


class TestBiorthogonalMetric:
    @pytest.mark.parametrize("z", [-1.0, -0.5])
    def test_hermitian_input_gives_identity(self, z):
        sys_ = eigensystem(build_coulomb_hamiltonian(6, 0.0, z))
        theta = metric_from_biorthogonal(sys_)
        assert np.max(np.abs(theta.matrix - np.eye(6))) < 1e-12

    def test_n2_lands_in_closed_form_family(self):
        a = 0.5
        sys_ = eigensystem(build_coulomb_hamiltonian(2, a, -1.0))
        theta = metric_from_biorthogonal(sys_)
        # fit (k, m): k from the diagonal, m from the real off-diagonal part
        k = theta.matrix[0, 0].real
        m = theta.matrix[0, 1].real / k
        want = n2_metric(k, m, a)
        assert np.max(np.abs(theta.matrix - want.matrix)) < 1e-10

    def test_n6_weighted_positive(self):
        sys_ = eigensystem(build_coulomb_hamiltonian(6, 0.3, -1.0))
        theta = metric_from_biorthogonal(sys_, KappaWeights(np.arange(1.0, 7.0)))
        herm = np.max(np.abs(theta.matrix - theta.matrix.conj().T))
        assert herm <= 1e-14 * np.max(np.abs(theta.matrix))
        pos, smallest = is_positive(theta)
        assert pos and smallest > 0
        h = build_coulomb_hamiltonian(6, 0.3, -1.0)
        assert dieudonne_residual(h, theta) <= 1e-10

    def test_complex_spectrum_rejected(self):
        sys_ = eigensystem(build_coulomb_hamiltonian(4, 1.5, -1.0))
        with pytest.raises(ComplexSpectrumError):
            metric_from_biorthogonal(sys_)

    def test_weight_count_mismatch(self):
        sys_ = eigensystem(build_coulomb_hamiltonian(4, 0.3, -1.0))
        with pytest.raises(ValueError):
            metric_from_biorthogonal(sys_, KappaWeights(np.ones(3)))

    def test_positivity_margin_shrinks_toward_alpha(self):
        margins = []
        for a in (0.3, 0.6, 0.75):
            sys_ = eigensystem(build_coulomb_hamiltonian(4, a, -1.0))
            _, smallest = is_positive(metric_from_biorthogonal(sys_))
            margins.append(smallest)
        assert margins[0] > margins[1] > margins[2] > 0


class TestKappaWeights:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            KappaWeights(np.array([1.0, 0.0]))

    def test_ones(self):
        np.testing.assert_array_equal(KappaWeights.ones(3).weights, [1, 1, 1])


class TestIsPositive:
    def test_identity(self):
        assert is_positive(np.eye(3)) == (True, 1.0)

    def test_n2_positive_case(self):
        pos, smallest = is_positive(n2_metric(1.0, 0.0, 0.5))
        assert pos and smallest == pytest.approx(0.5, abs=1e-12)

    def test_n2_indefinite_case(self):
        pos, smallest = is_positive(n2_metric(1.0, 1.0, 0.5))
        assert not pos
        assert smallest == pytest.approx(1.0 - np.sqrt(1.25), abs=1e-12)

    def test_rejects_nonhermitian(self):
        with pytest.raises(ValueError):
            is_positive(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestN2Metric:
    def test_identity_member(self):
        np.testing.assert_array_equal(n2_metric(1.0, 0.0, 0.0).matrix, np.eye(2))

    @given(k=pos_params, m=params, a=params)
    @settings(max_examples=50)
    def test_eigenvalue_formula(self, k, m, a):
        got = np.sort(np.linalg.eigvalsh(n2_metric(k, m, a).matrix))
        root = np.sqrt(k * k * m * m + k * k * a * a)
        np.testing.assert_allclose(got, sorted([k - root, k + root]), atol=1e-12)

    @given(k=pos_params, m=params, a=params, lam=pos_params)
    @settings(max_examples=30)
    def test_scaling_covariance(self, k, m, a, lam):
        scaled = n2_metric(lam * k, m, a).matrix
        base = n2_metric(k, m, a).matrix
        assert np.max(np.abs(scaled - lam * base)) <= 1e-12 * lam * k
        assert is_positive(scaled)[0] == is_positive(base)[0]

    def test_parity_limit(self):
        # k -> 0, m -> inf with km -> 1 approaches the parity matrix
        theta = n2_metric(1e-10, 1e10, 0.7)
        assert np.max(np.abs(theta.matrix - parity(2).matrix)) < 1e-9


class TestN2MetricAngles:
    def test_beta_half_pi_is_identity(self):
        np.testing.assert_allclose(
            n2_metric_angles(1.0, np.pi / 2, 1.0).matrix, np.eye(2), atol=1e-15
        )

    def test_cpt_slice(self):
        beta = 0.8
        theta = n2_metric_angles(1.0, beta, np.pi / 2).matrix
        want = np.array([[1.0, -1j * np.cos(beta)], [1j * np.cos(beta), 1.0]])
        np.testing.assert_allclose(theta, want, atol=1e-15)

    def test_reparametrization_identity(self):
        k, beta, gamma = 2.0, np.pi / 3, np.pi / 4
        got = n2_metric_angles(k, beta, gamma).matrix
        want = n2_metric(k, np.cos(beta) * np.cos(gamma), np.cos(beta) * np.sin(gamma))
        assert np.max(np.abs(got - want.matrix)) <= 1e-15 * k

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            n2_metric_angles(0.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            n2_metric_angles(1.0, 4.0, 1.0)


class TestCptCharge:
    def test_zero_coupling_gives_parity(self):
        c, k = cpt_charge_n2(0.0)
        assert k == 1.0
        np.testing.assert_array_equal(c, parity(2).matrix)

    def test_involution_at_0p6(self):
        c, k = cpt_charge_n2(0.6)
        assert k == pytest.approx(1.25, abs=1e-14)
        assert np.max(np.abs(c @ c - np.eye(2))) <= 1e-14

    @pytest.mark.parametrize("a", [0.0, 0.3, 0.6, 0.9])
    def test_cp_product_solves_dieudonne(self, a):
        c, _ = cpt_charge_n2(a)
        theta = c @ parity(2).matrix
        h = build_coulomb_hamiltonian(2, a, -1.0)
        assert dieudonne_residual(h, theta) <= 1e-14

    def test_matches_angle_family(self):
        a = 0.6
        c, k = cpt_charge_n2(a)
        theta = c @ parity(2).matrix
        beta = np.arcsin(1.0 / k)
        want = n2_metric_angles(k, beta, np.pi / 2).matrix
        assert np.max(np.abs(theta - want)) < 1e-12

    def test_outside_reality_interval(self):
        with pytest.raises(ValueError, match="CPT"):
            cpt_charge_n2(1.0)


class TestN2Observable:
    def test_reproduces_hamiltonian(self):
        a = 0.7
        obs = n2_observable(2.0, 0.0, 0.0, -a, a)
        h = build_coulomb_hamiltonian(2, a, -1.0)
        np.testing.assert_array_equal(obs.matrix, h.matrix)

    def test_trivial_identity_member(self):
        obs = n2_observable(1.0, 0.0, 0.0, 0.0, 0.4)
        np.testing.assert_allclose(obs.matrix, np.eye(2), atol=1e-15)

    @given(d=params, b=params, c=params, g=params, m=params,
           a=st.floats(min_value=0.1, max_value=2.0, **finite),
           k=pos_params)
    @settings(max_examples=50)
    def test_crypto_hermitian_against_companion_metric(self, d, b, c, g, m, a, k):
        lam = n2_observable(d, b, c, g, a, m_shape=m).matrix
        theta = n2_metric(k, m, a).matrix
        res = np.linalg.norm(lam.conj().T @ theta - theta @ lam)
        assert res <= 1e-11 * max(1.0, np.linalg.norm(lam)) * np.linalg.norm(theta)

    def test_charge_special_case(self):
        # D = b = c = 0, g = -sqrt(k^2 - 1) reproduces the charge up to the
        # off-diagonal sign convention
        a = 0.6
        c_mat, k = cpt_charge_n2(a)
        g = -np.sqrt(k * k - 1.0)
        obs = n2_observable(0.0, 0.0, 0.0, g, a, m_shape=0.0)
        np.testing.assert_allclose(np.diag(obs.matrix), np.diag(c_mat), atol=1e-12)
        np.testing.assert_allclose(
            np.abs(obs.matrix), np.abs(c_mat), atol=1e-12
        )

    def test_zero_coupling_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            n2_observable(1.0, 0.0, 0.0, 0.0, 0.0)


class TestN4MetricAnsatz:
    def test_identity_at_zero_coupling(self):
        theta = n4_metric_ansatz(1.0, 0.0, 1.0, 0.0, 0.0, -1.0)
        np.testing.assert_array_equal(theta.matrix, np.eye(4))

    @given(k=params, m=params, r=params, eta=params,
           a=params, z=st.floats(min_value=-1.5, max_value=-0.5, **finite))
    @settings(max_examples=50)
    def test_solves_dieudonne_for_all_parameters(self, k, m, r, eta, a, z):
        theta = n4_metric_ansatz(k, m, r, eta, a, z)
        tm = theta.matrix
        assert np.max(np.abs(tm - tm.conj().T)) == 0
        h = build_coulomb_hamiltonian(4, a, z)
        num = np.linalg.norm(h.matrix.conj().T @ tm - tm @ h.matrix)
        assert num <= 1e-12 * max(1.0, np.linalg.norm(tm)) * np.linalg.norm(h.matrix)

    @pytest.mark.parametrize("a", [0.2, 0.4])
    @pytest.mark.parametrize("z", [-1.0, -0.8])
    def test_closed_form_eigenvalues(self, a, z):
        theta = n4_metric_ansatz(1.0, 0.0, 1.0, 0.0, a, z)
        got = np.sort(np.linalg.eigvalsh(theta.matrix))
        np.testing.assert_allclose(got, n4_metric_eigenvalues(a, z), atol=1e-10)


class TestBandWidth:
    def test_identity(self):
        assert band_width(np.eye(5)) == 0

    def test_n2_full(self):
        assert band_width(n2_metric(1.0, 0.5, 0.5)) == 1

    def test_generic_biorthogonal_metric_is_full(self):
        sys_ = eigensystem(build_coulomb_hamiltonian(6, 0.3, -1.0))
        theta = metric_from_biorthogonal(sys_)
        assert band_width(theta, tolerance=1e-12) == 5

    def test_tridiagonal(self):
        m = 2 * np.eye(4) - np.eye(4, k=1) - np.eye(4, k=-1)
        assert band_width(m) == 1


class TestSInnerProduct:
    def test_euclidean_with_identity(self):
        psi = np.array([1.0, 2j])
        phi = np.array([3.0, -1j])
        assert s_inner_product(psi, phi, np.eye(2)) == np.vdot(psi, phi)

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(7)
        theta = n2_metric(1.2, 0.3, 0.4).matrix
        psi = rng.normal(size=2) + 1j * rng.normal(size=2)
        phi = rng.normal(size=2) + 1j * rng.normal(size=2)
        lhs = s_inner_product(psi, phi, theta)
        rhs = s_inner_product(phi, psi, theta)
        assert lhs == pytest.approx(np.conj(rhs), abs=1e-14)

    def test_positive_norm_under_positive_metric(self):
        rng = np.random.default_rng(11)
        sys_ = eigensystem(build_coulomb_hamiltonian(4, 0.3, -1.0))
        theta = metric_from_biorthogonal(sys_)
        for _ in range(10):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            val = s_inner_product(psi, psi, theta)
            assert abs(val.imag) < 1e-12 * abs(val.real)
            assert val.real > 0

    def test_right_eigenvectors_orthonormal_under_unit_kappa(self):
        sys_ = eigensystem(build_coulomb_hamiltonian(6, 0.3, -1.0))
        theta = metric_from_biorthogonal(sys_)
        vr = sys_.right_vectors
        gram = np.array(
            [
                [s_inner_product(vr[:, i], vr[:, j], theta) for j in range(6)]
                for i in range(6)
            ]
        )
        assert np.max(np.abs(gram - np.eye(6))) < 1e-10

    def test_hamiltonian_self_adjoint(self):
        rng = np.random.default_rng(13)
        h = build_coulomb_hamiltonian(6, 0.3, -1.0)
        theta = metric_from_biorthogonal(eigensystem(h))
        for _ in range(10):
            psi = rng.normal(size=6) + 1j * rng.normal(size=6)
            phi = rng.normal(size=6) + 1j * rng.normal(size=6)
            lhs = s_inner_product(psi, h.matrix @ phi, theta)
            rhs = s_inner_product(h.matrix @ psi, phi, theta)
            assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_shape_check(self):
        with pytest.raises(ValueError):
            s_inner_product(np.ones(3), np.ones(2), np.eye(2))


class TestSolutionSpaceDimension:
    @pytest.mark.parametrize("a", [0.2, 0.5, 0.9])
    def test_n2_dimension_is_two(self, a):
        h = build_coulomb_hamiltonian(2, a, -1.0)
        assert dieudonne_solution_dimension(h) == 2

    def test_hermitian_matrix_full_commutant(self):
        # distinct-eigenvalue Hermitian H: solutions are functions of H,
        # dimension N
        m = np.diag([1.0, 2.0, 3.0])
        assert dieudonne_solution_dimension(m) == 3
