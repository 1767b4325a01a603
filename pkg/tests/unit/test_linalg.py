"""
Unit tests cho kernel đại số tuyến tính.

Priority: P0
"""

import numpy as np
import pytest

from qbec.core.error_handler import (
    DimensionMismatchError,
    NegativeEigenvalueError,
    NoConvergenceError,
    NotHermitianError,
)
from qbec.services import linalg


def _random_hermitian(d: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return g + g.conj().T


@pytest.mark.p0
@pytest.mark.parametrize("d,seed", [(2, 1), (3, 2), (6, 3), (9, 4), (16, 5)])
def test_eig_hermitian_matches_reference_spectrum(d, seed):
    """
    Test Description: Jacobi cho cùng phổ với LAPACK

    Given:
    - Ma trận Hermitian ngẫu nhiên d×d

    When:
    - Phân rã bằng eig_hermitian

    Then:
    - Trị riêng tăng dần, khớp numpy.linalg.eigvalsh
    - V·diag(λ)·V† tái tạo ma trận, V unitary
    """
    m = _random_hermitian(d, seed)

    decomp = linalg.eig_hermitian(m)

    assert np.all(np.diff(decomp.eigenvalues) >= 0)
    np.testing.assert_allclose(decomp.eigenvalues, np.linalg.eigvalsh(m), atol=1e-10)
    np.testing.assert_allclose(decomp.reconstruct(), m, atol=1e-10)
    v = decomp.eigenvectors
    np.testing.assert_allclose(v.conj().T @ v, np.eye(d), atol=1e-10)


def test_eigenvectors_have_real_positive_leading_component():
    m = _random_hermitian(5, 11)

    vectors = linalg.eig_hermitian(m).eigenvectors

    for col in range(vectors.shape[1]):
        v = vectors[:, col]
        lead = v[np.flatnonzero(np.abs(v) > 1e-8 * np.max(np.abs(v)))[0]]
        assert abs(lead.imag) < 1e-12
        assert lead.real > 0


def test_eig_handles_degenerate_and_diagonal_input():
    decomp = linalg.eig_hermitian(np.diag([2.0, 1.0, 1.0, 0.0]))

    np.testing.assert_allclose(decomp.eigenvalues, [0.0, 1.0, 1.0, 2.0])
    np.testing.assert_allclose(linalg.eig_hermitian(np.zeros((3, 3))).eigenvalues, np.zeros(3))


def test_eig_rejects_non_hermitian_and_non_square():
    with pytest.raises(NotHermitianError):
        linalg.eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(DimensionMismatchError):
        linalg.eig_hermitian(np.zeros((2, 3)))


def test_eig_raises_when_sweep_budget_is_exhausted(monkeypatch):
    monkeypatch.setattr(linalg, "JACOBI_MAX_SWEEPS", 0)

    with pytest.raises(NoConvergenceError):
        linalg.eig_hermitian(_random_hermitian(4, 7))


def test_pinv_sqrt_inverts_on_support_only():
    m = np.diag([4.0, 1.0, 0.0])

    result = linalg.pinv_sqrt(m)

    np.testing.assert_allclose(result, np.diag([0.5, 1.0, 0.0]), atol=1e-14)


def test_pinv_sqrt_in_rotated_basis():
    u = np.linalg.qr(_random_hermitian(3, 21))[0]
    m = u @ np.diag([0.0, 0.25, 1.0]) @ u.conj().T

    root = linalg.pinv_sqrt(m)

    np.testing.assert_allclose(root @ m @ root, u[:, 1:] @ u[:, 1:].conj().T, atol=1e-10)


def test_pinv_sqrt_rejects_negative_matrix():
    with pytest.raises(NegativeEigenvalueError):
        linalg.pinv_sqrt(np.diag([1.0, -0.5]))


def test_support_basis_respects_relative_cutoff():
    values, vectors = linalg.support_basis(np.diag([1.0, 1e-12, 0.5]))

    np.testing.assert_allclose(values, [0.5, 1.0])
    assert vectors.shape == (3, 2)


def test_tensor_uses_row_major_global_index():
    a = np.arange(4).reshape(2, 2)
    b = np.arange(9).reshape(3, 3)

    t = linalg.tensor(a, b)

    # phần tử [(i·3 + k), (j·3 + l)] = A[i,j]·B[k,l]
    assert t[1 * 3 + 2, 0 * 3 + 1] == a[1, 0] * b[2, 1]


def test_trace_norm_hermitian_and_general():
    assert linalg.trace_norm(np.diag([1.0, -2.0])) == pytest.approx(3.0)
    assert linalg.trace_norm(np.array([[0.0, 1.0], [0.0, 0.0]])) == pytest.approx(1.0)

    m = np.random.default_rng(3).standard_normal((4, 4))
    expected = np.linalg.svd(m, compute_uv=False).sum()
    assert linalg.trace_norm(m) == pytest.approx(expected, abs=1e-10)


def _random_psd(d: int, rank: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    return g @ g.conj().T


@pytest.mark.p0
def test_eig_hermitian_reconstructs_500_random_matrices():
    """
    Test Description: Quét 500 ma trận Hermitian ngẫu nhiên, d từ 2 đến 9

    Given:
    - 500 ma trận Hermitian có seed, kích thước xoay vòng 2..9

    When:
    - Phân rã từng ma trận bằng eig_hermitian

    Then:
    - ‖V·diag(λ)·V† − M‖_max <= 1e-10·‖M‖_max
    - V†V = I trong 1e-10
    """
    worst = 0.0
    for seed in range(500):
        d = 2 + seed % 8
        m = _random_hermitian(d, 1000 + seed)

        decomp = linalg.eig_hermitian(m)

        scale = np.max(np.abs(m))
        worst = max(worst, np.max(np.abs(decomp.reconstruct() - m)) / scale)
        v = decomp.eigenvectors
        np.testing.assert_allclose(v.conj().T @ v, np.eye(d), atol=1e-10)
    assert worst <= 1e-10


@pytest.mark.parametrize("d,rank,seed", [(3, 3, 31), (4, 2, 32), (6, 4, 33), (5, 1, 34)])
def test_pinv_sqrt_sandwich_is_support_projector(d, rank, seed):
    m = _random_psd(d, rank, seed)

    root = linalg.pinv_sqrt(m)
    projector = root @ m @ root

    np.testing.assert_allclose(projector @ projector, projector, atol=1e-10)
    np.testing.assert_allclose(projector, projector.conj().T, atol=1e-10)
    assert np.trace(projector).real == pytest.approx(rank, abs=1e-10)


@pytest.mark.parametrize("seed", range(6))
def test_pinv_sqrt_of_square_is_pseudo_inverse(seed):
    rng = np.random.default_rng(40 + seed)
    u = np.linalg.qr(_random_hermitian(4, 50 + seed))[0]
    values = np.concatenate([rng.uniform(0.2, 2.0, size=3), [0.0]])
    m = u @ np.diag(values) @ u.conj().T

    root = linalg.pinv_sqrt(m @ m)

    np.testing.assert_allclose(root, np.linalg.pinv(m, rcond=1e-8, hermitian=True), atol=1e-10)


def test_tensor_is_associative():
    rng = np.random.default_rng(60)
    a, b, c = (rng.standard_normal((k, k + 1)) for k in (2, 3, 2))

    left = linalg.tensor(linalg.tensor(a, b), c)
    right = linalg.tensor(a, linalg.tensor(b, c))

    np.testing.assert_allclose(left, right, atol=1e-14)


def test_tensor_mixed_product_property():
    rng = np.random.default_rng(61)
    a, c = rng.standard_normal((2, 3)), rng.standard_normal((3, 2))
    b = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    d = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))

    np.testing.assert_allclose(
        linalg.tensor(a, b) @ linalg.tensor(c, d), linalg.tensor(a @ c, b @ d), atol=1e-12
    )
