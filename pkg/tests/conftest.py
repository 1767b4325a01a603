"""
Pytest configuration và fixtures cho tests.

Fixtures:
- temp_dir: thư mục tạm cho file JSON/CSV
- run_cli: gọi `qbec.cli.main.main` và trả về (exit code, stdout, stderr)
- sigma_35, rho_half: các trạng thái mẫu dùng lại nhiều lần
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import pytest

# Test không được phụ thuộc vào .env của máy chạy.
for _name in ("QBEC_TOLERANCE", "QBEC_CUTOFF", "QBEC_SEED", "QBEC_LOG_LEVEL", "QBEC_JOBS"):
    os.environ.pop(_name, None)

from qbec.services import examples  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "e2e: luồng CLI đầu-cuối")
    config.addinivalue_line("markers", "p0: critical")
    config.addinivalue_line("markers", "p1: important")


@dataclass
class CliResult:
    exit_code: int
    out: str
    err: str


@pytest.fixture
def temp_dir():
    """Tạo temporary directory cho file tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Chạy CLI trong process; logging để cho caplog bắt, không cấu hình lại root logger."""
    from qbec.cli import main as cli_main

    monkeypatch.setattr(cli_main, "setup_logging", lambda level: None)

    def _run(*argv: str) -> CliResult:
        capsys.readouterr()
        code = cli_main.main([str(a) for a in argv])
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    return _run


@pytest.fixture
def sigma_35():
    return examples.sigma_alpha(3.5)


@pytest.fixture
def rho_half():
    return examples.rho_a(0.5)
