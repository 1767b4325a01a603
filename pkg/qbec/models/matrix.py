"""
ComplexMatrix: ma trận phức dense, lưu theo row-major.

Dùng trực tiếp numpy ndarray complex128; các model giữ bản copy read-only
để giá trị bất biến sau khi khởi tạo.
"""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt

from ..core.error_handler import DimensionMismatchError

ComplexMatrix = npt.NDArray[np.complex128]


def frozen_matrix(data: Any, rows: int | None = None, cols: int | None = None) -> ComplexMatrix:
    """Copy `data` thành ma trận complex128 read-only, kiểm tra kích thước nếu có."""

    mat = np.array(data, dtype=np.complex128, copy=True)
    if mat.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got {mat.ndim} dimension(s)")
    if rows is not None and mat.shape[0] != rows:
        raise DimensionMismatchError(f"expected {rows} rows, got {mat.shape[0]}")
    if cols is not None and mat.shape[1] != cols:
        raise DimensionMismatchError(f"expected {cols} columns, got {mat.shape[1]}")
    mat.flags.writeable = False
    return mat
