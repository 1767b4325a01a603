"""
Các họ trạng thái và kênh dạng đóng trên hai qutrit.

- sigma_alpha(α) = (2/7)P₊³ + (α/7)σ₊ + ((5−α)/7)σ₋ và kênh channel_alpha(α)
- rho_a(a) và kênh dạng đóng channel_a_closed_form(a)

Nhãn cơ sở đánh số từ 0; P_ij = |i⟩⟨j|.
"""

from __future__ import annotations

import math

import numpy as np

from ..core.error_handler import OutOfRangeError
from ..models.channel import KrausChannel
from ..models.matrix import ComplexMatrix
from ..models.state import BipartiteState
from .states import max_entangled

QUTRIT = 3

ALPHA_MIN = 2.0
ALPHA_MAX = 5.0
# Khoảng α mà họ σ_α được biết là bound entangled.
ALPHA_BE_RANGE = (3.0, 4.0)


def unit(i: int, j: int, d: int = QUTRIT) -> ComplexMatrix:
    """P_ij = |i⟩⟨j|."""
    p = np.zeros((d, d), dtype=np.complex128)
    p[i, j] = 1.0
    return p


def _check_alpha(alpha: float) -> None:
    if not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise OutOfRangeError(f"alpha must lie in [{ALPHA_MIN}, {ALPHA_MAX}], got {alpha}")


def _check_a(a: float) -> None:
    if not 0.0 < a < 1.0:
        raise OutOfRangeError(f"a must lie in the open interval (0, 1), got {a}")


def _shift_projector(shift: int) -> ComplexMatrix:
    """(1/3) Σ_k |k, k⊕shift⟩⟨k, k⊕shift|."""
    rho = np.zeros((QUTRIT**2, QUTRIT**2), dtype=np.complex128)
    for k in range(QUTRIT):
        idx = k * QUTRIT + (k + shift) % QUTRIT
        rho[idx, idx] = 1.0 / QUTRIT
    return rho


def sigma_plus() -> ComplexMatrix:
    return _shift_projector(1)


def sigma_minus() -> ComplexMatrix:
    return _shift_projector(-1)


def _sigma_alpha_matrix(alpha: float) -> ComplexMatrix:
    """Ma trận σ_α không kiểm tra miền; hợp lệ (PSD, vết 1) với 0 ≤ α ≤ 5."""
    return (
        (2.0 / 7.0) * max_entangled(QUTRIT).rho
        + (alpha / 7.0) * sigma_plus()
        + ((5.0 - alpha) / 7.0) * sigma_minus()
    )


def sigma_alpha(alpha: float) -> BipartiteState:
    """σ_α trên C³⊗C³, α ∈ [2, 5]; cả hai reduction đều là I/3."""
    _check_alpha(alpha)
    return BipartiteState(QUTRIT, QUTRIT, _sigma_alpha_matrix(alpha))


def channel_alpha(alpha: float) -> KrausChannel:
    """
    Kênh có Choi state là σ_α.

    Kraus: √(2/7)·I, √(α/7)·P_{k⊕1,k}, √((5−α)/7)·P_{k⊖1,k}. Hệ số 1/3 của
    σ± được hấp thụ bởi chuẩn hóa 1/m của Choi, nên trọng số shift là α/7.
    """
    _check_alpha(alpha)
    ops = [math.sqrt(2.0 / 7.0) * np.eye(QUTRIT, dtype=np.complex128)]
    ops += [math.sqrt(alpha / 7.0) * unit((k + 1) % QUTRIT, k) for k in range(QUTRIT)]
    ops += [math.sqrt((5.0 - alpha) / 7.0) * unit((k - 1) % QUTRIT, k) for k in range(QUTRIT)]
    return KrausChannel(QUTRIT, QUTRIT, tuple(ops))


def rho_a_unnormalized(a: float) -> ComplexMatrix:
    """Ma trận 9×9 trong ngoặc, chưa nhân 1/(8a+1)."""
    _check_a(a)
    m = np.zeros((QUTRIT**2, QUTRIT**2), dtype=np.complex128)
    for idx in (0, 1, 2, 3, 4, 5, 7):
        m[idx, idx] = a
    for i in (0, 4, 8):
        for j in (0, 4, 8):
            if i != j:
                m[i, j] = a
    m[6, 6] = m[8, 8] = (1.0 + a) / 2.0
    m[6, 8] = m[8, 6] = math.sqrt(1.0 - a * a) / 2.0
    return m


def rho_a(a: float) -> BipartiteState:
    """Trạng thái PPT hai qutrit với 0 < a < 1; reduction A = diag(3a, 3a, 1+2a)/(8a+1)."""
    return BipartiteState(QUTRIT, QUTRIT, rho_a_unnormalized(a) / (8.0 * a + 1.0))


def rho_a_reduction(a: float) -> ComplexMatrix:
    _check_a(a)
    return np.diag([3.0 * a, 3.0 * a, 1.0 + 2.0 * a]).astype(np.complex128) / (8.0 * a + 1.0)


def closed_form_coefficients(a: float) -> dict[str, float]:
    """
    Hệ số Kraus của Λ_A cho rho_a, dựng lại từ Choi state đã lọc.

    Phân tích (8a+1)ρ = a·|u⟩⟨u| + a·Σ|ik⟩⟨ik| + |w⟩⟨w| với
    u = |00⟩+|11⟩+|22⟩, (ik) ∈ {01, 02, 10, 12, 21},
    w = √((1+a)/2)|20⟩ + √((1−a)/2)|22⟩, rồi chia thành phần hệ A thứ i
    cho √q_i, q = (3a, 3a, 1+2a).
    """
    _check_a(a)
    return {
        "v_scale": math.sqrt(a),
        "shift_from_low": 1.0 / math.sqrt(3.0),
        "shift_from_top": math.sqrt(a / (2.0 * a + 1.0)),
        "w_tilde_low": math.sqrt((1.0 + a) / (2.0 * (2.0 * a + 1.0))),
        "w_tilde_top": math.sqrt((1.0 - a) / (2.0 * (2.0 * a + 1.0))),
    }


def closed_form_v(a: float) -> ComplexMatrix:
    """V = diag[1/√(3a), 1/√(3a), 1/√(2a+1)]."""
    _check_a(a)
    return np.diag(
        [1.0 / math.sqrt(3.0 * a), 1.0 / math.sqrt(3.0 * a), 1.0 / math.sqrt(2.0 * a + 1.0)]
    ).astype(np.complex128)


def closed_form_w_tilde(a: float) -> ComplexMatrix:
    coeff = closed_form_coefficients(a)
    return coeff["w_tilde_low"] * unit(0, 2) + coeff["w_tilde_top"] * unit(2, 2)


def channel_a_closed_form(a: float) -> KrausChannel:
    """
    Λ_A dạng đóng cho rho_a.

    Kraus: √a·V; (1/√3)·P_{10}, P_{20}, P_{01}, P_{21}; √(a/(2a+1))·P_{12}; W̃.
    """
    coeff = closed_form_coefficients(a)
    low = coeff["shift_from_low"]
    ops = [
        coeff["v_scale"] * closed_form_v(a),
        low * unit(1, 0),
        low * unit(2, 0),
        low * unit(0, 1),
        low * unit(2, 1),
        coeff["shift_from_top"] * unit(1, 2),
        closed_form_w_tilde(a),
    ]
    return KrausChannel(QUTRIT, QUTRIT, tuple(ops))


def in_be_range(alpha: float) -> bool:
    low, high = ALPHA_BE_RANGE
    return low < alpha <= high
