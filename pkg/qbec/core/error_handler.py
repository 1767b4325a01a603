"""
Error handling và logging cho các lệnh CLI.

Exit code: 0 thành công, 1 lỗi miền/validation, 2 lỗi I/O hoặc parse.
"""

from __future__ import annotations

import json
import logging
import sys
from functools import wraps
from typing import Any, Callable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


class AppError(Exception):
    """Base exception cho toolkit."""

    def __init__(self, message: str, exit_code: int = EXIT_DOMAIN, error_code: str | None = None):
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code
        super().__init__(self.message)


class ConfigError(AppError):
    """Biến môi trường không hợp lệ."""

    def __init__(self, message: str, error_code: str = "CONFIG_ERROR"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class NotHermitianError(AppError):
    def __init__(self, message: str = "Matrix is not Hermitian", error_code: str = "NOT_HERMITIAN"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class NoConvergenceError(AppError):
    def __init__(self, message: str = "Iteration budget exhausted", error_code: str = "NO_CONVERGENCE"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class NegativeEigenvalueError(AppError):
    def __init__(self, message: str, error_code: str = "NEGATIVE_EIGENVALUE"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class NotPSDError(NegativeEigenvalueError):
    def __init__(self, message: str, error_code: str = "NOT_PSD"):
        super().__init__(message, error_code=error_code)


class InvalidDimensionError(AppError):
    def __init__(self, message: str, error_code: str = "INVALID_DIMENSION"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class DimensionMismatchError(AppError):
    def __init__(self, message: str, error_code: str = "DIMENSION_MISMATCH"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class UnsupportedDimensionsError(AppError):
    def __init__(self, message: str, error_code: str = "UNSUPPORTED_DIMENSIONS"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class RankZeroError(AppError):
    def __init__(self, message: str = "Reduction has rank zero", error_code: str = "RANK_ZERO"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class OutOfRangeError(AppError):
    def __init__(self, message: str, error_code: str = "OUT_OF_RANGE"):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class InvalidStateError(AppError):
    """Trạng thái vi phạm một bất biến; error_code là tên bất biến."""

    def __init__(self, message: str, error_code: str):
        super().__init__(message, exit_code=EXIT_DOMAIN, error_code=error_code)


class ParseError(AppError):
    """File JSON sai định dạng; message nêu tên field lỗi."""

    def __init__(self, message: str, field: str | None = None, error_code: str = "PARSE_ERROR"):
        self.field = field
        super().__init__(message, exit_code=EXIT_IO, error_code=error_code)


class FileAccessError(AppError):
    def __init__(self, message: str, error_code: str = "FILE_ACCESS"):
        super().__init__(message, exit_code=EXIT_IO, error_code=error_code)


def error_payload(error: AppError | Exception) -> dict[str, Any]:
    """Tạo payload lỗi từ exception."""
    if isinstance(error, AppError):
        return {
            "error": error.message,
            "error_code": error.error_code or "UNKNOWN_ERROR",
            "exit_code": error.exit_code,
        }
    return {"error": "Internal error", "error_code": "INTERNAL_ERROR", "exit_code": EXIT_DOMAIN}


def handle_errors(func: Callable[..., int]) -> Callable[..., int]:
    """Decorator để handle errors trong các lệnh CLI; trả về exit code."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> int:
        try:
            return func(*args, **kwargs)
        except AppError as e:
            logger.warning("AppError in %s: %s", func.__name__, e.message)
            payload = error_payload(e)
            print(f"error [{payload['error_code']}]: {payload['error']}", file=sys.stderr)
            return e.exit_code
        except Exception as e:
            logger.error("Unhandled error in %s: %s", func.__name__, str(e), exc_info=True)
            print(f"error [INTERNAL_ERROR]: {e}", file=sys.stderr)
            return EXIT_DOMAIN

    return wrapper


def json_dumps(data: object) -> str:
    """Helper function để serialize báo cáo JSON."""
    return json.dumps(data, default=str, ensure_ascii=False)
