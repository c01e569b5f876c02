import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootgaps import (
    ConvergenceError,
    DenseSymmetric,
    EmptyProblemError,
    MagnitudeError,
    ParameterDomainError,
    Spectrum,
    SymTridiagonal,
    dense_eigenvalues,
    hermite,
    jacobi_matrix,
    trace_power,
    tridiag_eigenvalues,
)
from rootgaps.eigensolve import _ql_implicit

from conftest import ones_kernel_projection, random_symmetric


class TestDenseSymmetricType:
    def test_rejects_non_square(self):
        with pytest.raises(ParameterDomainError):
            DenseSymmetric(np.zeros((2, 3)))

    def test_rejects_asymmetric(self):
        with pytest.raises(ParameterDomainError):
            DenseSymmetric(np.array([[1.0, 2.0], [2.0 + 1e-15, 1.0]]))

    def test_rejects_non_finite(self):
        with pytest.raises(ParameterDomainError):
            DenseSymmetric(np.array([[np.inf]]))

    def test_rejects_empty(self):
        with pytest.raises(EmptyProblemError):
            DenseSymmetric(np.zeros((0, 0)))

    def test_entries_are_frozen(self):
        m = DenseSymmetric(np.eye(2))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 3.0


class TestSpectrumType:
    def test_rejects_descending_eigenvalues(self):
        with pytest.raises(ParameterDomainError):
            Spectrum(np.array([2.0, 1.0]), 0.0)

    def test_rejects_negative_residual(self):
        with pytest.raises(ParameterDomainError):
            Spectrum(np.array([1.0]), -1.0)


class TestTridiagEigenvalues:
    def test_one_by_one(self):
        spectrum = tridiag_eigenvalues(SymTridiagonal(np.array([0.0]), np.array([])))
        assert spectrum.eigenvalues.tolist() == [0.0]
        assert spectrum.residual == 0.0

    def test_two_by_two_zero_diagonal(self):
        spectrum = tridiag_eigenvalues(SymTridiagonal(np.zeros(2), np.array([1.0])))
        np.testing.assert_allclose(spectrum.eigenvalues, [-1.0, 1.0], atol=1e-15)

    def test_two_by_two_quadratic_oracle(self):
        # characteristic polynomial (2-x)(4-x) - 2 = x^2 - 6x + 6
        t = SymTridiagonal(np.array([2.0, 4.0]), np.array([math.sqrt(2.0)]))
        spectrum = tridiag_eigenvalues(t)
        disc = math.sqrt(36.0 - 24.0)
        expected = [(6.0 - disc) / 2.0, (6.0 + disc) / 2.0]
        np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=1e-15)

    def test_against_numpy_on_random_tridiagonals(self, rng):
        for n in (2, 3, 5, 9, 17, 40):
            t = SymTridiagonal(rng.normal(size=n), np.abs(rng.normal(size=n - 1)) + 0.1)
            spectrum = tridiag_eigenvalues(t)
            expected = np.linalg.eigvalsh(t.to_dense())
            scale = max(np.max(np.abs(expected)), 1.0)
            np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=0, atol=1e-13 * scale)
            assert spectrum.residual <= 1e-13

    def test_hermite_eigenvalue_symmetry(self):
        for n in range(2, 51):
            lam = tridiag_eigenvalues(jacobi_matrix(hermite(), n)).eigenvalues
            pair_defect = np.max(np.abs(lam + lam[::-1]))
            assert pair_defect <= 1e-12 * np.max(np.abs(lam))

    def test_sweep_cap_raises_convergence_error(self):
        d = np.zeros(3)
        e = np.array([1.0, 1.0, 0.0])
        with pytest.raises(ConvergenceError) as excinfo:
            _ql_implicit(d, e, max_sweeps=0)
        assert excinfo.value.stuck_index is not None


class TestDenseEigenvalues:
    def test_identity(self):
        spectrum = dense_eigenvalues(DenseSymmetric(np.eye(3)))
        np.testing.assert_array_equal(spectrum.eigenvalues, [1.0, 1.0, 1.0])

    def test_diagonal(self):
        spectrum = dense_eigenvalues(DenseSymmetric(np.diag([1.0, 2.0, 3.0])))
        np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 2.0, 3.0], atol=1e-15)

    def test_exchange_matrix_oracle(self):
        # characteristic polynomial x^2 - 1
        spectrum = dense_eigenvalues(DenseSymmetric(np.array([[0.0, 1.0], [1.0, 0.0]])))
        np.testing.assert_allclose(spectrum.eigenvalues, [-1.0, 1.0], atol=1e-15)

    def test_against_numpy_on_random_matrices(self, rng):
        for n in (2, 3, 4, 6, 8, 12, 25, 40):
            m = DenseSymmetric(random_symmetric(rng, n))
            spectrum = dense_eigenvalues(m)
            expected = np.linalg.eigvalsh(m.entries)
            scale = max(np.max(np.abs(expected)), 1.0)
            np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=0, atol=1e-12 * scale)
            assert spectrum.residual <= 1e-12


class TestTracePower:
    def test_identity(self):
        assert trace_power(DenseSymmetric(np.eye(4)), 5) == 4.0

    def test_diagonal(self):
        assert trace_power(DenseSymmetric(np.diag([1.0, 2.0])), 2) == 5.0

    def test_exchange_matrix_direct_multiplication(self):
        assert trace_power(DenseSymmetric(np.array([[0.0, 1.0], [1.0, 0.0]])), 2) == 2.0

    def test_rejects_nonpositive_power(self):
        m = DenseSymmetric(np.eye(2))
        with pytest.raises(ParameterDomainError):
            trace_power(m, 0)
        with pytest.raises(ParameterDomainError):
            trace_power(m, -3)

    def test_overflow_raises_magnitude_error(self):
        m = DenseSymmetric(np.full((2, 2), 1e60))
        with pytest.raises(MagnitudeError):
            trace_power(m, 8)

    def test_spectral_consistency(self, rng):
        # tr(m^k) against the eigenvalue power sum, two independent routes
        for _ in range(40):
            n = int(rng.integers(2, 13))
            m = DenseSymmetric(random_symmetric(rng, n))
            lam = dense_eigenvalues(m).eigenvalues
            for k in (1, 2, 4, 8):
                direct = trace_power(m, k)
                spectral = float(np.sum(lam**k))
                budget = 1e-9 * float(np.sum(np.abs(lam) ** k))
                assert abs(direct - spectral) <= max(budget, 1e-12)


class TestTraceInequalities:
    """tr(B^(2^r)) dominates the diagonal power sum, with a sharper
    constant when (1,...,1) spans the kernel."""

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=2, max_value=10), seed=st.integers(0, 2**32 - 1))
    def test_plain_diagonal_domination(self, n, seed):
        rng = np.random.default_rng(seed)
        b = DenseSymmetric(random_symmetric(rng, n))
        for r in range(4):
            lhs = trace_power(b, 2**r)
            rhs = float(np.sum(np.diag(b.entries) ** (2**r)))
            assert lhs - rhs >= -1e-12 * max(1.0, abs(lhs))

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=2, max_value=10), seed=st.integers(0, 2**32 - 1))
    def test_projected_diagonal_domination(self, n, seed):
        rng = np.random.default_rng(seed)
        b = DenseSymmetric(ones_kernel_projection(random_symmetric(rng, n)))
        factor = n / (n - 1)
        for r in range(4):
            lhs = trace_power(b, 2**r)
            rhs = factor ** (2**r - 1) * float(np.sum(np.diag(b.entries) ** (2**r)))
            assert lhs - rhs >= -1e-12 * max(1.0, abs(lhs))
