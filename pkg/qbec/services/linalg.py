"""
Kernel đại số tuyến tính dense cho ma trận phức.

Bao gồm:
- Phân rã trị riêng Hermitian bằng Jacobi vòng (cyclic Jacobi)
- Hàm ma trận giới hạn trên support (M^{-1/2}, projector)
- Tích tensor, trace norm

Mọi hàm là hàm thuần, không có trạng thái dùng chung, an toàn khi gọi từ
nhiều thread.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..core.error_handler import (
    DimensionMismatchError,
    NegativeEigenvalueError,
    NoConvergenceError,
    NotHermitianError,
)
from ..models.matrix import ComplexMatrix

logger = logging.getLogger(__name__)

# Tolerance mặc định, tương đối so với độ lớn của ma trận.
DEFAULT_HERMITIAN_TOL = 1e-10
DEFAULT_PSD_TOL = 1e-10
DEFAULT_SUPPORT_CUTOFF = 1e-10

# Dừng Jacobi khi off(A) <= JACOBI_EPS · ‖A‖_F, hoặc khi off đã chạm
# nhiễu làm tròn (dưới JACOBI_STAGNATION · ‖A‖_F và không giảm nữa).
JACOBI_EPS = 1e-14
JACOBI_STAGNATION = 1e-12
JACOBI_MAX_SWEEPS = 60


@dataclass(frozen=True)
class EigenDecomposition:
    """Trị riêng tăng dần và vector riêng trực chuẩn theo cột."""

    eigenvalues: np.ndarray
    eigenvectors: ComplexMatrix

    def reconstruct(self) -> ComplexMatrix:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def max_norm(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def _require_square(m: np.ndarray, name: str = "matrix") -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {m.shape}")


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_HERMITIAN_TOL) -> bool:
    """‖M − M†‖_max <= tol·‖M‖_max."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_norm(m - m.conj().T) <= tol * max_norm(m)


def _fix_phase(vectors: np.ndarray) -> np.ndarray:
    """Đưa thành phần khác 0 đầu tiên của mỗi cột về số thực dương."""
    out = vectors.copy()
    for col in range(out.shape[1]):
        v = out[:, col]
        scale = np.max(np.abs(v))
        nonzero = np.flatnonzero(np.abs(v) > 1e-8 * scale)
        if nonzero.size:
            lead = v[nonzero[0]]
            out[:, col] = v * (abs(lead) / lead)
    return out


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Khử a[p,q] bằng phép quay unitary J = D·R, cập nhật tại chỗ."""
    apq = a[p, q]
    b = abs(apq)
    e = apq / b
    alpha = a[p, p].real
    beta = a[q, q].real
    theta = 0.5 * math.atan2(2.0 * b, beta - alpha)
    c = math.cos(theta)
    s = math.sin(theta)
    ec = e.conjugate()

    # A ← A·J
    col_p = a[:, p].copy()
    col_q = a[:, q]
    a[:, p] = c * col_p - s * ec * col_q
    a[:, q] = s * col_p + c * ec * col_q
    # A ← J†·A
    row_p = a[p, :].copy()
    row_q = a[q, :]
    a[p, :] = c * row_p - s * e * row_q
    a[q, :] = s * row_p + c * e * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp = v[:, p].copy()
    vq = v[:, q]
    v[:, p] = c * vp - s * ec * vq
    v[:, q] = s * vp + c * ec * vq


def eig_hermitian(m: np.ndarray, tol: float = DEFAULT_HERMITIAN_TOL) -> EigenDecomposition:
    """
    Phân rã trị riêng ma trận Hermitian bằng Jacobi vòng.

    Args:
        m: Ma trận vuông Hermitian (trong phạm vi tol)
        tol: Tolerance tương đối cho kiểm tra tính Hermitian

    Returns:
        EigenDecomposition với trị riêng tăng dần; mỗi vector riêng được
        chuẩn pha sao cho thành phần khác 0 đầu tiên là thực dương.

    Raises:
        NotHermitianError, NoConvergenceError
    """
    m = np.asarray(m, dtype=np.complex128)
    _require_square(m)
    if not is_hermitian(m, tol):
        raise NotHermitianError(
            f"matrix is not Hermitian: ‖M − M†‖_max = {max_norm(m - m.conj().T):.3e}"
        )

    n = m.shape[0]
    a = 0.5 * (m + m.conj().T)
    v = np.eye(n, dtype=np.complex128)
    scale = float(np.linalg.norm(a))

    sweeps = 0
    prev_off = math.inf
    while True:
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= JACOBI_EPS * scale or scale == 0.0:
            break
        if off <= JACOBI_STAGNATION * scale and off >= 0.5 * prev_off:
            break
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise NoConvergenceError(f"Jacobi did not converge after {sweeps} sweeps (off = {off:.3e})")
        prev_off = off
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _jacobi_rotate(a, v, p, q)
        sweeps += 1

    logger.debug("Jacobi converged in %d sweep(s) for n=%d", sweeps, n)
    eigenvalues = np.real(np.diag(a)).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return EigenDecomposition(
        eigenvalues=eigenvalues[order],
        eigenvectors=_fix_phase(v[:, order]),
    )


def _psd_spectrum(
    m: np.ndarray, psd_tol: float, herm_tol: float
) -> tuple[EigenDecomposition, float]:
    decomp = eig_hermitian(m, herm_tol)
    lam_max = float(decomp.eigenvalues[-1]) if decomp.eigenvalues.size else 0.0
    lam_min = float(decomp.eigenvalues[0]) if decomp.eigenvalues.size else 0.0
    if lam_min < -psd_tol * max(lam_max, 0.0):
        raise NegativeEigenvalueError(
            f"matrix is not positive semidefinite: min eigenvalue {lam_min:.3e}"
        )
    return decomp, lam_max


def support_mask(eigenvalues: np.ndarray, cutoff: float) -> np.ndarray:
    """Các trị riêng λ > cutoff·λ_max được coi là thuộc support."""
    if eigenvalues.size == 0:
        return np.zeros(0, dtype=bool)
    lam_max = float(eigenvalues[-1])
    if lam_max <= 0.0:
        return np.zeros(eigenvalues.shape, dtype=bool)
    return eigenvalues > cutoff * lam_max


def support_basis(
    m: np.ndarray,
    cutoff: float = DEFAULT_SUPPORT_CUTOFF,
    psd_tol: float = DEFAULT_PSD_TOL,
    herm_tol: float = DEFAULT_HERMITIAN_TOL,
) -> tuple[np.ndarray, ComplexMatrix]:
    """Trả về (trị riêng trên support, các vector riêng trực chuẩn span support)."""
    decomp, _ = _psd_spectrum(m, psd_tol, herm_tol)
    mask = support_mask(decomp.eigenvalues, cutoff)
    return decomp.eigenvalues[mask], decomp.eigenvectors[:, mask]


def pinv_sqrt(
    m: np.ndarray,
    cutoff: float = DEFAULT_SUPPORT_CUTOFF,
    psd_tol: float = DEFAULT_PSD_TOL,
    herm_tol: float = DEFAULT_HERMITIAN_TOL,
) -> ComplexMatrix:
    """
    M^{-1/2} trên support, 0 trên kernel.

    Trị riêng λ <= cutoff·λ_max được coi là 0.
    """
    m = np.asarray(m, dtype=np.complex128)
    values, vectors = support_basis(m, cutoff, psd_tol, herm_tol)
    if values.size == 0:
        return np.zeros_like(m)
    return (vectors / np.sqrt(values)) @ vectors.conj().T


def projector_onto(vectors: np.ndarray) -> ComplexMatrix:
    """Projector trực giao lên span các cột trực chuẩn."""
    return vectors @ vectors.conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> ComplexMatrix:
    """A ⊗ B, phần tử [(i·rB + k), (j·cB + l)] = A[i,j]·B[k,l]."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def trace_norm(m: np.ndarray, tol: float = DEFAULT_HERMITIAN_TOL) -> float:
    """
    Tổng các giá trị kỳ dị.

    Với M Hermitian: Σ|λ_i|. Trường hợp tổng quát dùng ma trận giãn
    [[0, M], [M†, 0]] có trị riêng ±σ_i, nên chỉ cần bộ giải Hermitian.
    """
    m = np.asarray(m, dtype=np.complex128)
    _require_square(m)
    if is_hermitian(m, 1e-14):
        return float(np.sum(np.abs(eig_hermitian(m, tol).eigenvalues)))
    n = m.shape[0]
    dilation = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    dilation[:n, n:] = m
    dilation[n:, :n] = m.conj().T
    return 0.5 * float(np.sum(np.abs(eig_hermitian(dilation, tol).eigenvalues)))
