"""
Đọc/ghi file JSON cho trạng thái và kênh.

State:   {"kind": "state", "dim_a": m, "dim_b": n, "matrix": [[[re, im], ...], ...]}
Channel: {"kind": "channel", "dim_in": m, "dim_out": n, "kraus": [matrix, ...]}

Số thực được ghi với 17 chữ số có nghĩa (`.17g`), đủ để ghi rồi đọc lại cho
đúng từng bit.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from ..core.error_handler import FileAccessError, ParseError
from ..models.channel import KrausChannel
from ..models.state import BipartiteState
from ..services.reporting import complex_pairs

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"

STATE_KIND = "state"
CHANNEL_KIND = "channel"


def _load_json(path: str | Path) -> dict[str, Any]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileAccessError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    return data


def _require_kind(data: dict[str, Any], kind: str) -> None:
    if data.get("kind") != kind:
        raise ParseError(f"field 'kind' must be {kind!r}, got {data.get('kind')!r}", field="kind")


def _positive_int(data: dict[str, Any], name: str) -> int:
    value = data.get(name)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ParseError(f"field '{name}' must be a positive integer, got {value!r}", field=name)
    return value


def _parse_number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"field '{field}' contains a non-numeric entry {value!r}", field=field)
    return float(value)


def parse_matrix(raw: Any, rows: int, cols: int, field: str) -> np.ndarray:
    """Danh sách lồng nhau các cặp [re, im] → ma trận complex rows×cols."""
    if not isinstance(raw, list) or len(raw) != rows:
        raise ParseError(f"field '{field}' must be a list of {rows} rows", field=field)
    out = np.zeros((rows, cols), dtype=np.complex128)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"field '{field}' row {i} must hold {cols} entries", field=field)
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != 2:
                raise ParseError(
                    f"field '{field}' entry ({i}, {j}) must be a [re, im] pair", field=field
                )
            out[i, j] = complex(_parse_number(entry[0], field), _parse_number(entry[1], field))
    return out


def state_to_dict(state: BipartiteState) -> dict[str, Any]:
    return {
        "kind": STATE_KIND,
        "dim_a": state.dim_a,
        "dim_b": state.dim_b,
        "matrix": complex_pairs(state.rho),
    }


def channel_to_dict(ch: KrausChannel) -> dict[str, Any]:
    return {
        "kind": CHANNEL_KIND,
        "dim_in": ch.dim_in,
        "dim_out": ch.dim_out,
        "kraus": [complex_pairs(op) for op in ch.kraus],
    }


def state_from_dict(data: dict[str, Any]) -> BipartiteState:
    _require_kind(data, STATE_KIND)
    dim_a = _positive_int(data, "dim_a")
    dim_b = _positive_int(data, "dim_b")
    size = dim_a * dim_b
    return BipartiteState(dim_a, dim_b, parse_matrix(data.get("matrix"), size, size, "matrix"))


def channel_from_dict(data: dict[str, Any]) -> KrausChannel:
    _require_kind(data, CHANNEL_KIND)
    dim_in = _positive_int(data, "dim_in")
    dim_out = _positive_int(data, "dim_out")
    raw = data.get("kraus")
    if not isinstance(raw, list) or not raw:
        raise ParseError("field 'kraus' must be a non-empty list of matrices", field="kraus")
    ops = tuple(parse_matrix(op, dim_out, dim_in, f"kraus[{idx}]") for idx, op in enumerate(raw))
    return KrausChannel(dim_in, dim_out, ops)


def read_state(path: str | Path) -> BipartiteState:
    state = state_from_dict(_load_json(path))
    logger.debug("read %dx%d state from %s", state.dim_a, state.dim_b, path)
    return state


def read_channel(path: str | Path) -> KrausChannel:
    ch = channel_from_dict(_load_json(path))
    logger.debug("read %d->%d channel from %s", ch.dim_in, ch.dim_out, path)
    return ch


def encode_json(value: Any) -> str:
    """JSON một dòng; float ghi theo FLOAT_FORMAT thay cho repr ngắn nhất."""
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {encode_json(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(encode_json(v) for v in value) + "]"
    return json.dumps(value)


def write_json(data: dict[str, Any], path: str | Path) -> Path:
    path = Path(path)
    try:
        path.write_text(encode_json(data) + "\n", encoding="utf-8")
    except OSError as exc:
        raise FileAccessError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def write_state(state: BipartiteState, path: str | Path) -> Path:
    return write_json(state_to_dict(state), path)


def write_channel(ch: KrausChannel, path: str | Path) -> Path:
    return write_json(channel_to_dict(ch), path)

