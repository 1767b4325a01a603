"""
Service dựng kênh binding-entanglement từ một trạng thái bound entangled.

Quy trình (cho side A; side B đối xứng):
1. Lọc (filtering) ρ về σ có reduction A = I/r:
   σ = ((rρ_A)^{-1/2} ⊗ I) ρ ((rρ_A)^{-1/2} ⊗ I), ρ_A nghịch đảo trên support.
2. Θ: ánh xạ CP có Choi state là ρ (thu gọn về support của ρ_A).
3. Γ_A(·) = (1/r) ρ_A^{-1/2} (·) ρ_A^{-1/2}; Λ_A = Θ ∘ Γ_A^T.

Θ và Γ_A nói chung không trace-preserving, nhưng Λ_A thì có, và
choi(Λ_A) = σ.

Khi reduction có hạng r nhỏ hơn chiều hệ, mọi thứ được biểu diễn trong tọa độ
support (r chiều): σ là trạng thái r⊗n và kênh có dim_in = r. Input m×m cần
được nén bằng `restrict_input` trước khi đưa vào kênh.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..core.error_handler import RankZeroError
from ..models.channel import KrausChannel
from ..models.matrix import ComplexMatrix
from ..models.state import BipartiteState, Side
from . import channels, linalg
from .states import STATE_TOLERANCE, reduce, swap_subsystems, validate_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilterResult:
    """Kết quả lọc về reduction cực đại hỗn hợp.

    sigma: trạng thái đã lọc (r⊗n với side A, m⊗r với side B)
    r: hạng của reduction được chọn
    reduction: ρ_A (hoặc ρ_B) ban đầu
    filter: toán tử lọc r×dim, = U†·(rρ_side)^{-1/2}
    support_basis: U, các cột trực chuẩn span support (I khi hạng đầy đủ)
    compressed: ρ viết trong tọa độ support của hệ được chọn
    """

    sigma: BipartiteState
    r: int
    reduction: ComplexMatrix
    filter: ComplexMatrix
    support_basis: ComplexMatrix
    compressed: BipartiteState
    side: Side


@dataclass(frozen=True)
class ConstructionReport:
    """Các map trung gian cùng độ lệch trace-preserving của từng map."""

    filtered: FilterResult
    theta: KrausChannel
    filter_map: KrausChannel
    channel: KrausChannel
    theta_tp_defect: float
    filter_tp_defect: float
    channel_tp_defect: float


def _compress(rho: BipartiteState, side: Side, basis: np.ndarray) -> BipartiteState:
    """(U†⊗I) ρ (U⊗I) cho side A, tương tự cho side B."""
    eye = np.eye(rho.dim_b if side is Side.A else rho.dim_a)
    if side is Side.A:
        iso = linalg.tensor(basis, eye)
        return BipartiteState(basis.shape[1], rho.dim_b, iso.conj().T @ rho.rho @ iso)
    iso = linalg.tensor(eye, basis)
    return BipartiteState(rho.dim_a, basis.shape[1], iso.conj().T @ rho.rho @ iso)


def _local(op: np.ndarray, other_dim: int, side: Side) -> ComplexMatrix:
    eye = np.eye(other_dim)
    return linalg.tensor(op, eye) if side is Side.A else linalg.tensor(eye, op)


def filter_to_maximally_mixed(
    rho: BipartiteState,
    side: Side = Side.A,
    cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF,
    tol: float = STATE_TOLERANCE,
) -> FilterResult:
    """
    Lọc ρ thành σ có reduction trên `side` bằng I/r.

    Raises:
        RankZeroError nếu reduction không có support
        InvalidStateError nếu ρ không phải trạng thái hợp lệ
    """
    side = Side(side)
    validate_state(rho, tol)
    reduction = reduce(rho, side)
    dim, other = rho.dims(side)
    values, vectors = linalg.support_basis(reduction, cutoff)
    r = int(values.size)
    if r == 0:
        raise RankZeroError("reduction has no support above the cutoff")

    basis = np.eye(dim, dtype=np.complex128) if r == dim else vectors
    if r < dim:
        logger.warning("reduction %s has rank %d < %d: working on its support", side.value, r, dim)

    inv_sqrt = linalg.pinv_sqrt(r * reduction, cutoff)
    filt = basis.conj().T @ inv_sqrt
    local = _local(filt, other, side)
    sigma_rho = local @ rho.rho @ local.conj().T
    if side is Side.A:
        sigma = BipartiteState(r, other, sigma_rho)
    else:
        sigma = BipartiteState(other, r, sigma_rho)

    logger.debug("filtered side %s with r=%d", side.value, r)
    return FilterResult(
        sigma=sigma,
        r=r,
        reduction=reduction,
        filter=filt,
        support_basis=basis,
        compressed=_compress(rho, side, basis),
        side=side,
    )


def filter_map(filtered: FilterResult, normalization: int | None = None) -> KrausChannel:
    """
    Γ^T: Kraus đơn (1/√N)·((ρ'^T)^{-1/2}) trên tọa độ support.

    N mặc định là r; với side B dùng N = m (xem `be_channel_B`).
    """
    reduction = reduce(filtered.compressed, filtered.side)
    norm = filtered.r if normalization is None else normalization
    op = linalg.pinv_sqrt(reduction.T) / np.sqrt(norm)
    return channels.single_kraus(op)


def construction_report(
    rho: BipartiteState,
    side: Side = Side.A,
    cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF,
) -> ConstructionReport:
    """Dựng Λ_A hoặc Λ_B kèm các map trung gian Θ, Γ^T."""
    side = Side(side)
    filtered = filter_to_maximally_mixed(rho, side, cutoff)
    compressed = filtered.compressed

    if side is Side.A:
        theta = channels.theta_map(compressed)
        gamma_t = filter_map(filtered)
    else:
        # Θ^T có Choi = (m/r)·swap(ρ'), nên Γ_B dùng chuẩn hóa 1/m thay cho 1/r
        # để Λ_B trace-preserving và choi(Λ_B) = swap(σ_B).
        theta = channels.transpose_map(channels.theta_map(compressed))
        gamma_t = filter_map(filtered, normalization=compressed.dim_a)

    lam = channels.compose(theta, gamma_t)
    if filtered.r == 1:
        logger.warning("rank-1 reduction: the constructed channel is a replacement channel")

    return ConstructionReport(
        filtered=filtered,
        theta=theta,
        filter_map=gamma_t,
        channel=lam,
        theta_tp_defect=theta.tp_defect(),
        filter_tp_defect=gamma_t.tp_defect(),
        channel_tp_defect=lam.tp_defect(),
    )


def be_channel_A(rho: BipartiteState, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF) -> KrausChannel:
    """Λ_A(·) = (1/r) Θ((ρ_A^T)^{-1/2} (·) (ρ_A^T)^{-1/2}); choi(Λ_A) = σ_A."""
    return construction_report(rho, Side.A, cutoff).channel


def be_channel_B(rho: BipartiteState, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF) -> KrausChannel:
    """
    Λ_B dựng từ reduction ρ_B và Θ^T; Λ_B: M_r → M_m.

    choi(Λ_B) = swap(σ_B) với σ_B là trạng thái lọc theo side B.
    """
    return construction_report(rho, Side.B, cutoff).channel


def expected_choi(filtered: FilterResult) -> BipartiteState:
    """Choi state mà kênh dựng được phải có: σ_A, hoặc swap(σ_B)."""
    if filtered.side is Side.A:
        return filtered.sigma
    return swap_subsystems(filtered.sigma)


def restrict_input(x: np.ndarray, support_basis: np.ndarray) -> ComplexMatrix:
    """
    Nén input m×m về tọa độ support r×r mà kênh dựng được sử dụng.

    Kênh tác động trên ρ^T nên dùng U^T X conj(U).
    """
    u = np.asarray(support_basis)
    return u.T @ np.asarray(x, dtype=np.complex128) @ u.conj()
