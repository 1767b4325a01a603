"""
BipartiteState: ma trận mật độ trên C^m ⊗ C^n.

Quy ước chỉ số toàn cục: row = i·n + k (hệ A là chỉ số chính).
Các bất biến vật lý (Hermitian, trace 1, PSD) được kiểm tra bởi
`services.states.validate_state`, không phải lúc khởi tạo, vì Choi state của
kênh không trace-preserving vẫn là một BipartiteState hợp lệ về kích thước.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..core.error_handler import InvalidDimensionError
from .matrix import ComplexMatrix, frozen_matrix


class Side(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class BipartiteState:
    dim_a: int
    dim_b: int
    rho: ComplexMatrix

    def __post_init__(self) -> None:
        if self.dim_a < 1 or self.dim_b < 1:
            raise InvalidDimensionError(f"dimensions must be positive, got {self.dim_a}x{self.dim_b}")
        size = self.dim_a * self.dim_b
        object.__setattr__(self, "rho", frozen_matrix(self.rho, size, size))

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def dims(self, side: Side) -> tuple[int, int]:
        """(kích thước hệ được chọn, kích thước hệ còn lại)."""
        return (self.dim_a, self.dim_b) if Side(side) is Side.A else (self.dim_b, self.dim_a)
