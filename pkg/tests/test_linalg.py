import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posilab import linalg
from posilab.errors import NumericalFailure, ValidationError
from posilab.fixtures import nilpotent_shift, split_range_matrix

import oracles


def test_as_matrix_rejects_bad_inputs():
    with pytest.raises(ValidationError):
        linalg.as_matrix([1, 2, 3])  # 1-D
    with pytest.raises(ValidationError):
        linalg.as_matrix(np.zeros((0, 3)))
    with pytest.raises(ValidationError):
        linalg.as_matrix([[np.nan, 0], [0, 1]])
    with pytest.raises(ValidationError):
        linalg.as_matrix([[np.inf + 1j, 0], [0, 1]])


# --- adjoint -----------------------------------------------------------------

def test_adjoint_scalar_conjugate():
    out = linalg.adjoint([[2 + 1j]])
    assert out == np.array([[2 - 1j]])


def test_adjoint_identity_self_adjoint():
    np.testing.assert_allclose(linalg.adjoint(np.eye(3)), np.eye(3))


def test_adjoint_shift_transposes():
    np.testing.assert_allclose(
        linalg.adjoint(nilpotent_shift(3)), np.eye(3, k=-1)
    )


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
def test_adjoint_involution(rows, cols, seed):
    g = np.random.default_rng(seed)
    m = g.standard_normal((rows, cols)) + 1j * g.standard_normal((rows, cols))
    np.testing.assert_allclose(linalg.adjoint(linalg.adjoint(m)), m)


# --- matmul / matpow ---------------------------------------------------------

def test_matmul_identity():
    m = np.array([[1, 2j], [3, 4]], dtype=complex)
    np.testing.assert_allclose(linalg.matmul(np.eye(2), m), m)


def test_matmul_invariant_block_square():
    t = np.array([[1, 1, 0, 0], [0, 2, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
                 dtype=complex)
    # hand multiplication of the upper block
    np.testing.assert_allclose(linalg.matmul(t, t)[:2, :2],
                               np.array([[1, 3], [0, 4]]))


def test_matmul_nilpotent():
    j = np.array([[0, 1], [0, 0]], dtype=complex)
    np.testing.assert_allclose(linalg.matmul(j, j), np.zeros((2, 2)))


def test_matmul_dimension_mismatch():
    with pytest.raises(ValidationError):
        linalg.matmul(np.ones((2, 3)), np.ones((2, 2)))


def test_matpow_zero_is_identity():
    m = np.array([[5, 1], [2, 3]], dtype=complex)
    np.testing.assert_allclose(linalg.matpow(m, 0), np.eye(2))


def test_matpow_shift_cubes_to_zero():
    np.testing.assert_allclose(linalg.matpow(nilpotent_shift(3), 3),
                               np.zeros((3, 3)))


def test_matpow_split_range_square():
    # direct multiplication oracle
    t = split_range_matrix()
    expected = oracles.mpow(t, 2)
    np.testing.assert_allclose(linalg.matpow(t, 2), expected)
    np.testing.assert_allclose(expected[:2, :2], np.array([[4, 3], [0, 1]]))
    np.testing.assert_allclose(expected[2:, 2:], np.zeros((2, 2)))


def test_matpow_rejects():
    with pytest.raises(ValidationError):
        linalg.matpow(np.ones((2, 3)), 2)
    with pytest.raises(ValidationError):
        linalg.matpow(np.eye(2), -1)


# --- hermitian eigensolver ---------------------------------------------------

def test_hermitian_eigen_diagonal():
    eig = linalg.hermitian_eigen(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 2.0, 3.0])


def test_hermitian_eigen_2x2_characteristic_polynomial():
    # roots of x^2 - 6x + 4: 3 +- sqrt(5)
    eig = linalg.hermitian_eigen(np.array([[1.0, 1.0], [1.0, 5.0]]))
    np.testing.assert_allclose(eig.eigenvalues,
                               [3 - np.sqrt(5), 3 + np.sqrt(5)], atol=1e-12)


def test_hermitian_eigen_zero():
    eig = linalg.hermitian_eigen(np.zeros((4, 4)))
    np.testing.assert_allclose(eig.eigenvalues, np.zeros(4))


def test_hermitian_eigen_invariants(rng):
    for _ in range(20):
        dim = int(rng.integers(1, 9))
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = (g + g.conj().T) / 2
        eig = linalg.hermitian_eigen(h)
        v = eig.eigenvectors
        assert linalg.operator_norm(v.conj().T @ v - np.eye(dim)) <= 1e-10
        recon = v @ np.diag(eig.eigenvalues) @ v.conj().T
        assert (linalg.operator_norm(h - recon)
                <= 1e-10 * max(1.0, linalg.operator_norm(h)))
        assert np.all(np.diff(eig.eigenvalues) >= -1e-14)


def test_hermitian_eigen_rejects_asymmetric():
    with pytest.raises(ValidationError, match="asymmetry"):
        linalg.hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


# --- PSD test ----------------------------------------------------------------

def test_is_psd_with_kernel():
    verdict = linalg.is_psd(np.diag([1.0, 0.0]))
    assert verdict.is_psd and verdict.witness is None


def test_is_psd_explicit_negative_direction():
    verdict = linalg.is_psd(np.diag([1.0, -1e-3]), tol=1e-10)
    assert not verdict.is_psd
    np.testing.assert_allclose(np.abs(verdict.witness), [0.0, 1.0], atol=1e-12)


def test_is_psd_indefinite_from_negative_diagonal():
    # a negative diagonal entry forces indefiniteness
    verdict = linalg.is_psd(np.array([[-1.0, -7.0], [-7.0, 103.0]]))
    assert not verdict.is_psd
    x = verdict.witness
    assert np.vdot(x, np.array([[-1.0, -7.0], [-7.0, 103.0]]) @ x).real < 0


def test_is_psd_shift_properties(rng):
    for _ in range(20):
        dim = int(rng.integers(1, 7))
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = (g + g.conj().T) / 2
        norm = linalg.operator_norm(h)
        assert linalg.is_psd(h + (norm + 1e-3) * np.eye(dim), tol=1e-10).is_psd
        lo = float(np.linalg.eigvalsh(h)[0])
        assert not linalg.is_psd(h - (abs(lo) + 1.0) * np.eye(dim), tol=1e-10).is_psd


def test_is_psd_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        linalg.is_psd(np.array([[0.0, 1.0], [0.0, 0.0]]))


# --- rank spaces -------------------------------------------------------------

def test_rank_spaces_zero_matrix():
    spaces = linalg.svd_rank_spaces(np.zeros((3, 3)))
    assert spaces.rank == 0
    assert spaces.kernel.dim == 3
    np.testing.assert_allclose(spaces.kernel.projector(), np.eye(3))


def test_rank_spaces_identity():
    spaces = linalg.svd_rank_spaces(np.eye(4))
    assert spaces.rank == 4
    assert spaces.kernel.dim == 0
    assert spaces.cokernel.dim == 0


def test_rank_spaces_split_range_matrix():
    # column-space oracle: columns of T span {e1, e2, e3}
    spaces = linalg.svd_rank_spaces(split_range_matrix())
    assert spaces.rank == 3
    oracle_proj = np.diag([1.0, 1.0, 1.0, 0.0])
    np.testing.assert_allclose(spaces.range.projector(), oracle_proj, atol=1e-12)
    np.testing.assert_allclose(spaces.cokernel.projector(),
                               np.diag([0.0, 0.0, 0.0, 1.0]), atol=1e-12)


def test_rank_nullity_and_kernel_annihilation(rng):
    for _ in range(25):
        rows = int(rng.integers(1, 11))
        cols = int(rng.integers(1, 11))
        inner = int(rng.integers(1, min(rows, cols) + 1))
        m = ((rng.standard_normal((rows, inner)) + 1j * rng.standard_normal((rows, inner)))
             @ (rng.standard_normal((inner, cols)) + 1j * rng.standard_normal((inner, cols))))
        spaces = linalg.svd_rank_spaces(m)
        assert spaces.rank + spaces.kernel.dim == cols
        assert spaces.range.dim + spaces.cokernel.dim == rows
        if spaces.kernel.dim:
            assert (linalg.operator_norm(m @ spaces.kernel.basis)
                    <= 1e-9 * max(1.0, linalg.operator_norm(m)))


# --- kron --------------------------------------------------------------------

def test_kron_identity():
    np.testing.assert_allclose(linalg.kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_zero_absorbs():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    np.testing.assert_allclose(linalg.kron(a, np.zeros((2, 2))), np.zeros((4, 4)))


def test_kron_nilpotent_square():
    j = np.array([[0, 1], [0, 0]], dtype=complex)
    # mixed product: (J (x) J)^2 = J^2 (x) J^2 = 0
    np.testing.assert_allclose(linalg.matpow(linalg.kron(j, j), 2),
                               np.zeros((4, 4)))


def test_kron_mixed_product(rng):
    for _ in range(30):
        da, db = int(rng.integers(2, 4)), int(rng.integers(2, 4))
        a, c = (rng.standard_normal((da, da)) + 1j * rng.standard_normal((da, da))
                for _ in range(2))
        b, d = (rng.standard_normal((db, db)) + 1j * rng.standard_normal((db, db))
                for _ in range(2))
        lhs = linalg.kron(a, b) @ linalg.kron(c, d)
        rhs = linalg.kron(a @ c, b @ d)
        scale = max(1.0, linalg.operator_norm(lhs))
        assert linalg.operator_norm(lhs - rhs) <= 1e-12 * scale


# --- pinv --------------------------------------------------------------------

def test_pinv_diagonal():
    np.testing.assert_allclose(linalg.pinv(np.diag([2.0, 0.0])),
                               np.diag([0.5, 0.0]), atol=1e-14)


def test_pinv_invertible_equals_inverse(rng):
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)) + 3 * np.eye(4)
    np.testing.assert_allclose(linalg.pinv(m), np.linalg.inv(m), atol=1e-10)


def test_pinv_rank_one_column():
    # normal equations: pinv of a column v is v* / ||v||^2
    col = np.array([[3.0], [4.0]])
    np.testing.assert_allclose(linalg.pinv(col), [[3 / 25, 4 / 25]], atol=1e-14)


def test_pinv_moore_penrose_identities(rng):
    for _ in range(15):
        rows = int(rng.integers(1, 7))
        cols = int(rng.integers(1, 7))
        m = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
        p = linalg.pinv(m)
        scale = max(1.0, linalg.operator_norm(m))
        assert linalg.operator_norm(m @ p @ m - m) <= 1e-9 * scale
        assert linalg.operator_norm(p @ m @ p - p) <= 1e-9 * max(1.0, linalg.operator_norm(p))
        proj = m @ p
        assert linalg.operator_norm(proj.conj().T - proj) <= 1e-9


# --- spectrum ----------------------------------------------------------------

def test_spectrum_diagonal():
    vals = linalg.spectrum(np.diag([0.0, 1.0, 2.0]))
    np.testing.assert_allclose(vals, [0.0, 1.0, 2.0], atol=1e-12)


def test_spectrum_split_range_multiset():
    vals = np.sort(linalg.spectrum(split_range_matrix()).real)
    np.testing.assert_allclose(vals, [0.0, 0.0, 1.0, 2.0], atol=1e-10)


def test_spectrum_jordan_block():
    vals = linalg.spectrum(np.array([[0, 1], [0, 0]], dtype=complex))
    np.testing.assert_allclose(np.abs(vals), [0.0, 0.0], atol=1e-7)


def test_spectrum_adjoint_conjugates(rng):
    for _ in range(20):
        dim = int(rng.integers(1, 8))
        m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        a = np.sort_complex(linalg.spectrum(m)).conj()
        b = np.sort_complex(linalg.spectrum(m.conj().T))
        a = np.sort_complex(a)
        assert max(abs(a - b)) <= 1e-8 * max(1.0, float(max(abs(a))))


# --- operator norm -----------------------------------------------------------

def test_operator_norm_diagonal():
    assert linalg.operator_norm(np.diag([3.0, -4.0])) == pytest.approx(4.0)


def test_operator_norm_unitary(rng):
    g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    q, _ = np.linalg.qr(g)
    assert linalg.operator_norm(q) == pytest.approx(1.0, abs=1e-12)


def test_operator_norm_shift():
    # sigma_max = sqrt(lambda_max(M* M)) = sqrt(4) = 2
    assert linalg.operator_norm(np.array([[0, 2], [0, 0]])) == pytest.approx(2.0)


# --- distinct values / hausdorff ---------------------------------------------

def test_distinct_values_clusters():
    vals = [0.0, 1e-9, 1.0, 1.0 + 2e-9, 2.0]
    reps = linalg.distinct_values(vals, tol=1e-6)
    assert len(reps) == 3


def test_hausdorff_distance_simple():
    assert linalg.hausdorff_distance([0.0, 1.0], [0.0, 1.5]) == pytest.approx(0.5)
    assert linalg.hausdorff_distance([1j], [1j]) == 0.0
