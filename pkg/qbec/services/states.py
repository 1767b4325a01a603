"""
Service cho trạng thái hai thành phần (bipartite).

Bao gồm:
- Trạng thái singlet P₊ⁿ, trạng thái tích, trạng thái ngẫu nhiên có seed
- Reduction (partial trace), partial transpose, hoán đổi hệ con
- Witness: negativity, realignment
- Kiểm tra support của trạng thái nằm trong tích support của các reduction
- Báo cáo tổng hợp `analyze`

Trạng thái không bao giờ được khẳng định là tách được (separable); verdict
chỉ phân biệt NPT, PPT có realignment > 1 và PPT chưa kết luận.
"""

from __future__ import annotations

import logging

import numpy as np

from ..core.error_handler import (
    InvalidDimensionError,
    InvalidStateError,
    UnsupportedDimensionsError,
)
from ..models.matrix import ComplexMatrix
from ..models.report import AnalysisReport, Verdict
from ..models.state import BipartiteState, Side
from . import linalg

logger = logging.getLogger(__name__)

STATE_TOLERANCE = 1e-10
INCLUSION_TOLERANCE = 1e-9


def _blocks(s: BipartiteState) -> np.ndarray:
    """ρ dưới dạng tensor 4 chỉ số [i, k, j, l] = ρ_{ik,jl}."""
    return np.asarray(s.rho).reshape(s.dim_a, s.dim_b, s.dim_a, s.dim_b)


def max_entangled(n: int) -> BipartiteState:
    """Projector lên (1/√n) Σ_i |i⟩|i⟩."""
    if n < 2:
        raise InvalidDimensionError(f"singlet needs n >= 2, got {n}")
    psi = np.zeros(n * n, dtype=np.complex128)
    psi[[i * n + i for i in range(n)]] = 1.0 / np.sqrt(n)
    return BipartiteState(n, n, np.outer(psi, psi.conj()))


def product_state(rho_a: np.ndarray, rho_b: np.ndarray) -> BipartiteState:
    rho_a = np.asarray(rho_a, dtype=np.complex128)
    rho_b = np.asarray(rho_b, dtype=np.complex128)
    return BipartiteState(rho_a.shape[0], rho_b.shape[0], linalg.tensor(rho_a, rho_b))


def validate_state(s: BipartiteState, tol: float = STATE_TOLERANCE) -> None:
    """
    Kiểm tra các bất biến vật lý của trạng thái.

    Raises:
        InvalidStateError với error_code là tên bất biến bị vi phạm:
        NOT_HERMITIAN, TRACE_NOT_ONE, NEGATIVE_EIGENVALUE
    """
    rho = np.asarray(s.rho)
    if not linalg.is_hermitian(rho, tol):
        raise InvalidStateError(
            f"state is not Hermitian (‖ρ − ρ†‖_max = {linalg.max_norm(rho - rho.conj().T):.3e})",
            error_code="NOT_HERMITIAN",
        )
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > tol:
        raise InvalidStateError(f"state trace is {trace.real:.12g}, expected 1", error_code="TRACE_NOT_ONE")
    min_eig = float(linalg.eig_hermitian(rho, tol).eigenvalues[0])
    if min_eig < -tol:
        raise InvalidStateError(
            f"state has negative eigenvalue {min_eig:.3e}", error_code="NEGATIVE_EIGENVALUE"
        )


def reduce(s: BipartiteState, side: Side = Side.A) -> ComplexMatrix:
    """Partial trace lên hệ `side` (trace out hệ còn lại)."""
    t = _blocks(s)
    if Side(side) is Side.A:
        return np.einsum("ikjk->ij", t)
    return np.einsum("ikil->kl", t)


def partial_transpose(s: BipartiteState, side: Side = Side.B) -> ComplexMatrix:
    """Chuyển vị riêng phần; với side A, phần tử (ik,jl) → (jk,il)."""
    t = _blocks(s)
    if Side(side) is Side.A:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(s.dim, s.dim)


def swap_subsystems(s: BipartiteState) -> BipartiteState:
    """Hoán đổi A ↔ B: ρ_{ik,jl} → ρ'_{ki,lj}."""
    t = _blocks(s).transpose(1, 0, 3, 2)
    return BipartiteState(s.dim_b, s.dim_a, t.reshape(s.dim, s.dim))


def pt_min_eigenvalue(s: BipartiteState, side: Side = Side.B) -> float:
    return float(linalg.eig_hermitian(partial_transpose(s, side)).eigenvalues[0])


def negativity(s: BipartiteState) -> float:
    """(‖ρ^{T_B}‖₁ − 1) / 2, kẹp về 0 khi nhiễu làm tròn cho giá trị âm."""
    value = (linalg.trace_norm(partial_transpose(s, Side.B)) - 1.0) / 2.0
    return max(value, 0.0)


def realigned_matrix(s: BipartiteState) -> ComplexMatrix:
    """R[(i,j),(k,l)] = ρ_{ik,jl}."""
    t = _blocks(s).transpose(0, 2, 1, 3)
    return t.reshape(s.dim_a * s.dim_a, s.dim_b * s.dim_b)


def realignment_value(s: BipartiteState) -> float:
    """Trace norm của ma trận realigned; giá trị > 1 chứng nhận vướng víu."""
    if s.dim_a != s.dim_b:
        raise UnsupportedDimensionsError(
            f"realignment is implemented for equal local dimensions only, got {s.dim_a}x{s.dim_b}"
        )
    return linalg.trace_norm(realigned_matrix(s))


def support_projector(m: np.ndarray, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF) -> ComplexMatrix:
    """Projector trực giao lên span các vector riêng có λ > cutoff·λ_max."""
    _, vectors = linalg.support_basis(m, cutoff)
    return linalg.projector_onto(vectors)


def support_inclusion_holds(s: BipartiteState, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF) -> bool:
    """
    Kiểm tra supp ρ ⊆ supp ρ_A ⊗ supp ρ_B.

    Tương đương (P_A⊗P_B)·ρ·(P_A⊗P_B) = ρ trong phạm vi 1e-9.
    """
    p_a = support_projector(reduce(s, Side.A), cutoff)
    p_b = support_projector(reduce(s, Side.B), cutoff)
    p = linalg.tensor(p_a, p_b)
    rho = np.asarray(s.rho)
    defect = linalg.max_norm(p @ rho @ p - rho)
    logger.debug("support inclusion defect %.3e", defect)
    return defect <= INCLUSION_TOLERANCE


def _complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_state(m: int, n: int, rank: int, seed: int) -> BipartiteState:
    """
    ρ = GG†/tr(GG†) với G là ma trận (m·n)×rank Gauss phức chuẩn.

    Dùng Generator riêng cho mỗi lần gọi, kết quả xác định theo seed.
    """
    if m < 1 or n < 1:
        raise InvalidDimensionError(f"dimensions must be positive, got {m}x{n}")
    if not 1 <= rank <= m * n:
        raise InvalidDimensionError(f"rank must lie in [1, {m * n}], got {rank}")
    rng = np.random.default_rng(seed)
    g = _complex_gaussian(rng, (m * n, rank))
    rho = g @ g.conj().T
    return BipartiteState(m, n, rho / np.trace(rho).real)


def _random_pure(rng: np.random.Generator, d: int) -> np.ndarray:
    psi = _complex_gaussian(rng, (d,))
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_product_state(m: int, n: int, seed: int) -> BipartiteState:
    rng = np.random.default_rng(seed)
    return product_state(_random_pure(rng, m), _random_pure(rng, n))


def random_separable_state(m: int, n: int, terms: int, seed: int) -> BipartiteState:
    """Tổ hợp lồi có trọng số ngẫu nhiên của `terms` trạng thái tích thuần."""
    if terms < 1:
        raise InvalidDimensionError(f"terms must be positive, got {terms}")
    rng = np.random.default_rng(seed)
    weights = rng.random(terms)
    weights /= weights.sum()
    rho = sum(
        w * linalg.tensor(_random_pure(rng, m), _random_pure(rng, n)) for w in weights
    )
    return BipartiteState(m, n, rho)


def classify(pt_min: float, realignment: float | None, tol: float) -> Verdict:
    if pt_min < -tol:
        return Verdict.NPT
    if realignment is not None and realignment > 1.0 + tol:
        return Verdict.PPT_REALIGNMENT_POSITIVE
    return Verdict.PPT_INCONCLUSIVE


def analyze(s: BipartiteState, tol: float = STATE_TOLERANCE) -> AnalysisReport:
    """
    Tổng hợp các witness cho một trạng thái hợp lệ.

    Raises:
        InvalidStateError nếu trạng thái vi phạm bất biến.
    """
    validate_state(s, tol)
    rho = np.asarray(s.rho)
    eigenvalues = linalg.eig_hermitian(rho, tol).eigenvalues
    pt_min = pt_min_eigenvalue(s)

    realignment = realignment_value(s) if s.dim_a == s.dim_b else None
    report = AnalysisReport(
        dim_a=s.dim_a,
        dim_b=s.dim_b,
        trace=float(np.trace(rho).real),
        min_eigenvalue=float(eigenvalues[0]),
        reduction_a=reduce(s, Side.A),
        reduction_b=reduce(s, Side.B),
        pt_min_eigenvalue=pt_min,
        negativity=negativity(s),
        realignment_value=realignment,
        verdict=classify(pt_min, realignment, tol),
        tolerance=tol,
    )
    logger.info("analyzed %dx%d state: verdict %s", s.dim_a, s.dim_b, report.verdict.value)
    return report
