"""
Service cho ánh xạ CP dạng Kraus và đẳng cấu trạng thái ↔ kênh.

Quy ước Choi: ChoiState = (I_m ⊗ Λ)P₊^m = (1/m) Σ_ij |i⟩⟨j| ⊗ Λ(|i⟩⟨j|),
tức là λ_{klij} = m·ρ_{ikjl}. Với Kraus V (n×m), vector tương ứng trong
C^m⊗C^n có thành phần ψ[i·n + k] = V[k, i].

Các danh sách Kraus chỉ được so sánh qua Choi matrix, không so từng phần tử.
"""

from __future__ import annotations

import logging

import numpy as np

from ..core.error_handler import DimensionMismatchError, InvalidDimensionError, NotPSDError
from ..models.channel import TP_TOLERANCE, ChannelVerification, ChoiState, KrausChannel
from ..models.matrix import ComplexMatrix
from ..models.state import BipartiteState, Side
from . import linalg
from .states import reduce

logger = logging.getLogger(__name__)

# Trị riêng dưới ngưỡng này (tương đối với λ_max) bị bỏ khi trích Kraus.
KRAUS_DROP_CUTOFF = 1e-12
CP_TOLERANCE = 1e-10


def identity_channel(m: int) -> KrausChannel:
    return KrausChannel(m, m, (np.eye(m, dtype=np.complex128),))


def random_channel(m: int, n: int, kraus_count: int, seed: int) -> KrausChannel:
    """
    Kênh trace-preserving ngẫu nhiên có seed.

    Lấy isometry (kraus_count·n)×m từ QR của ma trận Gauss phức rồi cắt
    thành các khối n×m, nên Σ V_i†V_i = I_m.
    """
    if kraus_count * n < m:
        raise InvalidDimensionError(
            f"need kraus_count·n >= m for a trace-preserving channel, got {kraus_count}·{n} < {m}"
        )
    rng = np.random.default_rng(seed)
    shape = (kraus_count * n, m)
    g = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    q, _ = np.linalg.qr(g)
    blocks = [q[i * n:(i + 1) * n, :] for i in range(kraus_count)]
    return KrausChannel(m, n, tuple(blocks))


def apply(ch: KrausChannel, x: np.ndarray) -> ComplexMatrix:
    """Λ(X) = Σ V_i X V_i†."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (ch.dim_in, ch.dim_in):
        raise DimensionMismatchError(
            f"input has shape {x.shape}, channel expects {(ch.dim_in, ch.dim_in)}"
        )
    out = np.zeros((ch.dim_out, ch.dim_out), dtype=np.complex128)
    for op in ch.kraus:
        out += op @ x @ op.conj().T
    return out


def _kraus_vector(op: np.ndarray) -> np.ndarray:
    # ψ[i·n + k] = V[k, i]
    return np.asarray(op).T.reshape(-1)


def choi(ch: KrausChannel) -> ChoiState:
    """(I⊗Λ)P₊^m; trace 1 khi và chỉ khi kênh trace-preserving."""
    m, n = ch.dim_in, ch.dim_out
    rho = np.zeros((m * n, m * n), dtype=np.complex128)
    for op in ch.kraus:
        psi = _kraus_vector(op)
        rho += np.outer(psi, psi.conj())
    return ChoiState(BipartiteState(m, n, rho / m))


def theta_map(state: BipartiteState, cutoff: float = KRAUS_DROP_CUTOFF) -> KrausChannel:
    """
    Ánh xạ CP có Choi state (với singlet P₊ theo chiều của hệ A) là `state`.

    Dùng eigenbasis của trạng thái: ρ = Σ p_i |ψ_i⟩⟨ψ_i|, ψ_i = Σ c^i_{jk}|e_j⟩|f_k⟩,
    Kraus (V_i)_{kj} = √(m·p_i)·c^i_{jk}. Không yêu cầu reduction A cực đại hỗn
    hợp, nên kết quả có thể không trace-preserving.

    Raises:
        NotPSDError nếu trạng thái có trị riêng âm vượt tolerance
    """
    m, n = state.dim_a, state.dim_b
    decomp = linalg.eig_hermitian(state.rho)
    values = decomp.eigenvalues
    lam_max = float(values[-1])
    if lam_max <= 0.0 or values[0] < -linalg.DEFAULT_PSD_TOL * lam_max:
        raise NotPSDError(f"Choi matrix is not positive semidefinite: min eigenvalue {values[0]:.3e}")

    keep = values > cutoff * lam_max
    dropped = int(np.count_nonzero(~keep))
    if dropped:
        logger.debug("dropped %d eigenvalue(s) below %.1e·λ_max during Kraus extraction", dropped, cutoff)

    operators = []
    for p, vec in zip(values[keep], decomp.eigenvectors[:, keep].T):
        coeffs = vec.reshape(m, n)  # c_{jk}
        operators.append(np.sqrt(m * p) * coeffs.T)
    return KrausChannel(m, n, tuple(operators))


def channel_from_choi(c: ChoiState, tol: float = TP_TOLERANCE) -> KrausChannel:
    """
    Khôi phục kênh Kraus từ Choi state; choi(channel_from_choi(c)) = c.

    Nếu reduction A không bằng I/m, kết quả vẫn CP nhưng không trace-preserving;
    trường hợp này chỉ được log ở mức warning.
    """
    ch = theta_map(c.state)
    reduction = reduce(c.state, Side.A)
    target = np.eye(c.dim_in) / c.dim_in
    defect = linalg.max_norm(reduction - target)
    if defect > tol:
        logger.warning(
            "Choi state reduction A differs from I/%d by %.3e: extracted map is CP but not trace-preserving",
            c.dim_in,
            defect,
        )
    return ch


def transpose_map(ch: KrausChannel) -> KrausChannel:
    """Λ^T với Kraus V_i^T (chuyển vị thường, không liên hợp); M_n → M_m."""
    return KrausChannel(ch.dim_out, ch.dim_in, tuple(op.T for op in ch.kraus))


def compose(outer: KrausChannel, inner: KrausChannel) -> KrausChannel:
    """outer ∘ inner với Kraus {W_i V_j}."""
    if outer.dim_in != inner.dim_out:
        raise DimensionMismatchError(
            f"cannot compose: outer expects dimension {outer.dim_in}, inner produces {inner.dim_out}"
        )
    ops = tuple(w @ v for w in outer.kraus for v in inner.kraus)
    return KrausChannel(inner.dim_in, outer.dim_out, ops)


def scale(ch: KrausChannel, factor: float) -> KrausChannel:
    """Ánh xạ factor·Λ (factor >= 0)."""
    root = np.sqrt(factor)
    return KrausChannel(ch.dim_in, ch.dim_out, tuple(root * op for op in ch.kraus))


def single_kraus(op: np.ndarray) -> KrausChannel:
    return KrausChannel.from_operators([np.asarray(op, dtype=np.complex128)])


def verify(ch: KrausChannel, tol: float = TP_TOLERANCE) -> ChannelVerification:
    """CP từ tính PSD của Choi; TP từ ‖Σ V†V − I‖_max."""
    choi_matrix = choi(ch).matrix
    values = linalg.eig_hermitian(choi_matrix).eigenvalues
    min_eig = float(values[0])
    lam_max = max(float(values[-1]), 0.0)
    defect = ch.tp_defect()
    return ChannelVerification(
        cp=min_eig >= -CP_TOLERANCE * max(lam_max, 1.0),
        tp=defect <= tol,
        tp_defect=defect,
        choi_min_eig=min_eig,
    )
