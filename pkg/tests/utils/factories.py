"""
Factory functions để tạo test data nhanh chóng.

Các factory này giúp tạo trạng thái, kênh và file JSON với default values
hợp lý, giảm boilerplate code trong tests.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from qbec.cli.files import write_channel, write_state
from qbec.models.channel import KrausChannel
from qbec.models.state import BipartiteState
from qbec.services import states


# ============================================================================
# State Factories
# ============================================================================

def create_test_state(m: int = 3, n: int = 3, rank: int | None = None, seed: int = 0) -> BipartiteState:
    """Trạng thái ngẫu nhiên có seed; mặc định hạng đầy đủ."""
    return states.random_state(m, n, rank or m * n, seed=seed)


def create_pure_state(vector: list[complex] | np.ndarray, m: int, n: int) -> BipartiteState:
    """|ψ⟩⟨ψ| với ψ được chuẩn hóa."""
    psi = np.asarray(vector, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return BipartiteState(m, n, np.outer(psi, psi.conj()))


def create_basis_product_state(m: int = 3, n: int = 3, i: int = 0, k: int = 0) -> BipartiteState:
    """|ik⟩⟨ik|, reduction hạng 1 ở cả hai phía."""
    psi = np.zeros(m * n)
    psi[i * n + k] = 1.0
    return create_pure_state(psi, m, n)


# ============================================================================
# File Factories
# ============================================================================

def create_state_file(directory: Path, state: BipartiteState, name: str = "state.json") -> Path:
    return write_state(state, directory / name)


def create_channel_file(directory: Path, ch: KrausChannel, name: str = "channel.json") -> Path:
    return write_channel(ch, directory / name)


def create_raw_json_file(directory: Path, data: Any, name: str = "raw.json") -> Path:
    """Ghi JSON tùy ý, dùng cho các case file sai định dạng."""
    path = directory / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def read_json(path: Path) -> dict[str, Any]:
    return json.loads(Path(path).read_text(encoding="utf-8"))
