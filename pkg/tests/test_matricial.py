import numpy as np
import pytest

from conftest import make_rng
from polycrit import matricial, numlin, poly
from polycrit.rng import random_matrix, random_zeros


class TestDftMatrix:
    def test_order_two(self):
        np.testing.assert_allclose(
            matricial.dft_matrix(2), np.array([[1, 1], [1, -1]]), atol=1e-12
        )

    def test_order_four_entry(self):
        f = matricial.dft_matrix(4)
        assert abs(f[1, 1] - (-1j)) <= 1e-12

    def test_first_row_and_column_are_ones(self):
        f = matricial.dft_matrix(7)
        np.testing.assert_allclose(f[0, :], np.ones(7), atol=1e-15)
        np.testing.assert_allclose(f[:, 0], np.ones(7), atol=1e-15)

    def test_hadamard_identity_order_three(self):
        f = matricial.dft_matrix(3)
        np.testing.assert_allclose(f @ numlin.adjoint(f), 3 * np.eye(3), atol=1e-12)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            matricial.dft_matrix(0)


class TestIsComplexHadamard:
    def test_dft_is_hadamard(self):
        assert matricial.is_complex_hadamard(matricial.dft_matrix(5))

    def test_identity_is_not(self):
        assert not matricial.is_complex_hadamard(np.eye(2))

    def test_rank_one_is_not(self):
        assert not matricial.is_complex_hadamard(np.ones((2, 2)))


class TestBuildConstruction:
    def test_two_point_swap(self):
        built = matricial.build_construction([1, -1])
        np.testing.assert_allclose(built.A, [[0, 1], [1, 0]], atol=1e-12)

    def test_scalar_spectrum_gives_scalar_matrix(self):
        c = 0.3 - 0.7j
        built = matricial.build_construction([c, c])
        np.testing.assert_allclose(built.A, c * np.eye(2), atol=1e-12)

    def test_normality_residual(self):
        rng = make_rng(61)
        zeros = random_zeros(rng, 5)
        built = matricial.build_construction(zeros)
        a = built.A
        comm = numlin.frobenius(a @ numlin.adjoint(a) - numlin.adjoint(a) @ a)
        assert comm <= 1e-8 * numlin.frobenius(a) ** 2
        assert numlin.frobenius(built.U @ numlin.adjoint(built.U) - np.eye(5)) <= 1e-10
        np.testing.assert_array_equal(np.diag(built.D), zeros)

    def test_custom_hadamard_hook(self):
        h = np.array([[1, 1], [1, -1]], dtype=complex)
        built = matricial.build_construction([1, -1], hadamard=h)
        np.testing.assert_allclose(built.A, [[0, 1], [1, 0]], atol=1e-12)
        with pytest.raises(ValueError):
            matricial.build_construction([1, -1], hadamard=np.eye(2))

    def test_rejects_single_zero(self):
        with pytest.raises(ValueError):
            matricial.build_construction([1.0])


class TestIsTraceVector:
    def test_identity_any_basis_vector(self):
        report = matricial.is_trace_vector(np.eye(3), [1, 0, 0])
        assert report.is_trace_vector
        assert report.k_tested == 3

    def test_flat_vector_for_diagonal(self):
        report = matricial.is_trace_vector(np.diag([1.0, 2.0]), np.array([1, 1]) / np.sqrt(2))
        assert report.is_trace_vector

    def test_basis_vector_fails_for_diagonal(self):
        report = matricial.is_trace_vector(np.diag([1.0, 2.0]), [1, 0])
        assert not report.is_trace_vector
        assert abs(report.max_defect - 0.5) <= 1e-14

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            matricial.is_trace_vector(np.eye(2), [1, 1])


class TestCompression:
    def test_basis_vector_gives_principal_submatrix_exactly(self):
        rng = make_rng(62)
        a = random_matrix(rng, 4)
        for i in range(4):
            z = np.zeros(4)
            z[i] = 1.0
            np.testing.assert_array_equal(
                matricial.compression(a, z), numlin.principal_submatrix(a, i + 1)
            )

    def test_identity_compresses_to_identity(self):
        rng = make_rng(63)
        z = random_zeros(rng, 3)
        z = z / np.linalg.norm(z)
        np.testing.assert_allclose(matricial.compression(np.eye(3), z), np.eye(2), atol=1e-12)

    def test_two_by_two_deletion(self):
        swap = np.array([[0, 1], [1, 0]], dtype=complex)
        np.testing.assert_array_equal(matricial.compression(swap, [0, 1]), [[0.0]])

    def test_spectrum_is_basis_independent(self):
        # compression along z and along exp(i phi) z are unitarily similar
        rng = make_rng(64)
        a = random_matrix(rng, 5)
        z = random_zeros(rng, 5)
        z = z / np.linalg.norm(z)
        s1 = numlin.general_eigvals(matricial.compression(a, z))
        s2 = numlin.general_eigvals(matricial.compression(a, np.exp(0.4j) * z))
        assert poly.multiset_match(s1, s2, 1e-9).matched


class TestIsDifferentiator:
    def test_construction_with_basis_vector(self):
        built = matricial.build_construction([1, -1])
        assert matricial.is_differentiator(built.A, [1, 0])

    def test_diagonal_with_basis_vector_is_not(self):
        assert not matricial.is_differentiator(np.diag([1.0, 2.0]), [1, 0])

    def test_scalar_matrix_any_unit_vector(self):
        rng = make_rng(65)
        z = random_zeros(rng, 3)
        z = z / np.linalg.norm(z)
        assert matricial.is_differentiator(0.5j * np.eye(3), z)


class TestCriticalPointsMatricial:
    def test_two_points(self):
        pts = matricial.critical_points_matricial([1, -1], 1)
        np.testing.assert_allclose(pts, [0], atol=1e-12)

    def test_quadratic_formula_oracle(self):
        expected = [1 - 1 / np.sqrt(3), 1 + 1 / np.sqrt(3)]
        for i in (1, 2, 3):
            pts = matricial.critical_points_matricial([0, 1, 2], i)
            assert poly.multiset_match(pts, expected, 1e-9).matched

    def test_repeated_zero(self):
        c = 0.2 + 0.9j
        pts = matricial.critical_points_matricial([c] * 4, 1)
        np.testing.assert_allclose(pts, [c] * 3, atol=1e-7)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            matricial.critical_points_matricial([1, -1], 3)


class TestInvariants:
    def test_basis_vectors_are_trace_vectors_of_construction(self):
        rng = make_rng(66)
        for n in range(2, 13):
            zeros = random_zeros(rng, n)
            a = matricial.build_construction(zeros).A
            for i in range(n):
                z = np.zeros(n)
                z[i] = 1.0
                report = matricial.is_trace_vector(a, z)
                assert report.max_defect <= 1e-8

    def test_main_identity_against_companion_oracle(self):
        rng = make_rng(67)
        for n in (2, 4, 7):
            zeros = random_zeros(rng, n)
            oracle = poly.roots(poly.derivative(poly.from_roots(zeros)))
            for i in range(1, n + 1):
                pts = matricial.critical_points_matricial(zeros, i)
                assert poly.multiset_match(pts, oracle, 1e-6).matched

    def test_submatrix_spectra_agree_across_indices(self):
        rng = make_rng(68)
        zeros = random_zeros(rng, 6)
        base = matricial.critical_points_matricial(zeros, 1)
        for i in range(2, 7):
            other = matricial.critical_points_matricial(zeros, i)
            assert poly.multiset_match(base, other, 1e-7).matched

    def test_unimodular_profile_is_trace_vector_for_any_diagonal(self):
        rng = make_rng(69)
        for n in (2, 5, 9):
            d = np.diag(random_zeros(rng, n))
            phases = np.exp(2j * np.pi * np.array([rng.uniform() for _ in range(n)]))
            z = phases / np.sqrt(n)
            report = matricial.is_trace_vector(d, z)
            assert report.is_trace_vector, report

    def test_differentiator_iff_trace_vector(self):
        rng = make_rng(70)
        agreements = 0
        for trial in range(200):
            n = 2 + trial % 7  # n in 2..8
            if trial % 3 == 0:
                # constructed pairs: both predicates true
                a = matricial.build_construction(random_zeros(rng, n)).A
                z = np.zeros(n)
                z[trial % n] = 1.0
            else:
                # generic pairs: both predicates false almost surely
                a = random_matrix(rng, n)
                z = random_zeros(rng, n)
                z = z / np.linalg.norm(z)
            tv = matricial.is_trace_vector(a, z, 1e-8).is_trace_vector
            df = matricial.is_differentiator(a, z, 1e-8)
            assert tv == df
            agreements += 1
        assert agreements == 200
