"""
Kênh lượng tử dạng Kraus và Choi state tương ứng.

KrausChannel biểu diễn ánh xạ CP Λ: M_m → M_n, Λ(X) = Σ V_i X V_i†,
mỗi V_i có shape n×m. Kênh không nhất thiết trace-preserving (Θ, Γ).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.error_handler import DimensionMismatchError, InvalidDimensionError
from .matrix import ComplexMatrix, frozen_matrix
from .state import BipartiteState

TP_TOLERANCE = 1e-10


@dataclass(frozen=True)
class KrausChannel:
    dim_in: int
    dim_out: int
    kraus: tuple[ComplexMatrix, ...]

    def __post_init__(self) -> None:
        if self.dim_in < 1 or self.dim_out < 1:
            raise InvalidDimensionError(f"dimensions must be positive, got {self.dim_in}->{self.dim_out}")
        ops = tuple(frozen_matrix(op) for op in self.kraus)
        if not ops:
            raise DimensionMismatchError("a channel needs at least one Kraus operator")
        for idx, op in enumerate(ops):
            if op.shape != (self.dim_out, self.dim_in):
                raise DimensionMismatchError(
                    f"kraus[{idx}] has shape {op.shape}, expected {(self.dim_out, self.dim_in)}"
                )
        object.__setattr__(self, "kraus", ops)

    @classmethod
    def from_operators(cls, operators: Sequence[ComplexMatrix]) -> "KrausChannel":
        """Suy ra dim_in, dim_out từ operator đầu tiên."""
        if not operators:
            raise DimensionMismatchError("a channel needs at least one Kraus operator")
        rows, cols = np.shape(operators[0])
        return cls(dim_in=int(cols), dim_out=int(rows), kraus=tuple(operators))

    def gram(self) -> ComplexMatrix:
        """Σ V_i† V_i."""
        return sum((op.conj().T @ op for op in self.kraus), np.zeros((self.dim_in, self.dim_in), complex))

    def tp_defect(self) -> float:
        """‖Σ V_i†V_i − I‖_max."""
        return float(np.max(np.abs(self.gram() - np.eye(self.dim_in))))

    @property
    def trace_preserving(self) -> bool:
        return self.tp_defect() <= TP_TOLERANCE


@dataclass(frozen=True)
class ChoiState:
    """Ảnh (I⊗Λ)P₊^m của một kênh, chuẩn hóa theo projector P₊ (trace 1 nếu TP).

    state.dim_a = m (đầu vào), state.dim_b = n (đầu ra).
    """

    state: BipartiteState
    convention: str = "normalized"

    @property
    def dim_in(self) -> int:
        return self.state.dim_a

    @property
    def dim_out(self) -> int:
        return self.state.dim_b

    @property
    def matrix(self) -> ComplexMatrix:
        return self.state.rho


@dataclass(frozen=True)
class ChannelVerification:
    cp: bool
    tp: bool
    tp_defect: float
    choi_min_eig: float

    def as_dict(self) -> dict[str, object]:
        return {
            "cp": self.cp,
            "tp": self.tp,
            "tp_defect": self.tp_defect,
            "choi_min_eig": self.choi_min_eig,
        }
