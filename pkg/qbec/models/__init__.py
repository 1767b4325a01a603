"""Các kiểu dữ liệu miền: ma trận, trạng thái, kênh, báo cáo."""

from .channel import ChannelVerification, ChoiState, KrausChannel
from .matrix import ComplexMatrix, frozen_matrix
from .report import AnalysisReport, Verdict
from .state import BipartiteState, Side

__all__ = [
    "AnalysisReport",
    "BipartiteState",
    "ChannelVerification",
    "ChoiState",
    "ComplexMatrix",
    "KrausChannel",
    "Side",
    "Verdict",
    "frozen_matrix",
]
