"""
Config chung cho toolkit qbec.

- Đọc cấu hình từ biến môi trường (.env) cho tolerance, cutoff, seed...
- Flag trên CLI luôn thắng biến môi trường.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

from .error_handler import ConfigError

load_dotenv()


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from exc


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc


@dataclass
class Settings:
    """Cấu hình của toolkit.

    Giá trị được đọc lúc khởi tạo instance, không phải lúc import class,
    để test có thể monkeypatch biến môi trường.
    """

    app_name: str = "qbec"
    tolerance: float = field(default_factory=lambda: _env_float("QBEC_TOLERANCE", 1e-10))
    cutoff: float = field(default_factory=lambda: _env_float("QBEC_CUTOFF", 1e-10))
    seed: int = field(default_factory=lambda: _env_int("QBEC_SEED", 42))
    jobs: int = field(default_factory=lambda: _env_int("QBEC_JOBS", 1))
    log_level: str = field(default_factory=lambda: os.getenv("QBEC_LOG_LEVEL", "WARNING").upper())


def load_settings() -> Settings:
    """Đọc lại cấu hình từ môi trường hiện tại."""

    return Settings()
