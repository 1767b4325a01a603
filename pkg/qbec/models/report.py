"""Báo cáo chẩn đoán cho một trạng thái hai thành phần."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .matrix import ComplexMatrix


class Verdict(str, Enum):
    NPT = "NPT"
    PPT_REALIGNMENT_POSITIVE = "PPT_REALIGNMENT_POSITIVE"
    PPT_INCONCLUSIVE = "PPT_INCONCLUSIVE"


@dataclass(frozen=True)
class AnalysisReport:
    """Kết quả của `services.states.analyze`.

    realignment_value là None khi dim_a != dim_b (realignment chỉ cài đặt
    cho trường hợp vuông).
    """

    dim_a: int
    dim_b: int
    trace: float
    min_eigenvalue: float
    reduction_a: ComplexMatrix
    reduction_b: ComplexMatrix
    pt_min_eigenvalue: float
    negativity: float
    realignment_value: float | None
    verdict: Verdict
    tolerance: float
