"""
Services cho báo cáo: render text bằng Jinja2, bảng bằng pandas.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np
import pandas as pd
from jinja2 import Environment, FileSystemLoader, select_autoescape

from ..core.error_handler import FileAccessError, OutOfRangeError
from ..models.channel import ChannelVerification
from ..models.report import AnalysisReport
from . import examples, states
from .verification import CheckResult

logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"

env = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    autoescape=select_autoescape(["html", "xml"]),
    trim_blocks=True,
    lstrip_blocks=True,
)

SWEEP_FAMILIES = ("sigma-alpha", "rho-a")
SWEEP_COLUMNS = ["param", "pt_min_eigenvalue", "negativity", "realignment_value", "verdict"]


def render_template(template_name: str, **context: object) -> str:
    """Helper render template Jinja2."""

    template = env.get_template(template_name)
    return template.render(**context)


def complex_pairs(matrix: np.ndarray) -> list[list[list[float]]]:
    """Ma trận phức → list các cặp [re, im] theo row-major."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def format_matrix(matrix: np.ndarray, precision: int = 6) -> list[str]:
    """Mỗi dòng của ma trận thành một chuỗi; bỏ phần ảo khi bằng 0."""
    lines = []
    for row in np.asarray(matrix):
        cells = []
        for z in row:
            if abs(z.imag) < 10.0 ** (-precision):
                cells.append(f"{z.real: .{precision}f}")
            else:
                cells.append(f"{z.real: .{precision}f}{z.imag:+.{precision}f}i")
        lines.append("  ".join(cells))
    return lines


def report_to_dict(report: AnalysisReport) -> dict[str, Any]:
    """Các field của AnalysisReport, dạng JSON-friendly."""
    return {
        "dim_a": report.dim_a,
        "dim_b": report.dim_b,
        "trace": report.trace,
        "min_eigenvalue": report.min_eigenvalue,
        "reduction_a": complex_pairs(report.reduction_a),
        "reduction_b": complex_pairs(report.reduction_b),
        "pt_min_eigenvalue": report.pt_min_eigenvalue,
        "negativity": report.negativity,
        "realignment_value": report.realignment_value,
        "verdict": report.verdict.value,
        "tolerance": report.tolerance,
    }


def render_analysis(report: AnalysisReport, source: str | None = None) -> str:
    return render_template(
        "analysis_report.txt.j2",
        report=report,
        source=source,
        reduction_a=format_matrix(report.reduction_a),
        reduction_b=format_matrix(report.reduction_b),
    )


def render_channel_verification(record: ChannelVerification, dim_in: int, dim_out: int, kraus_count: int) -> str:
    status = "ok" if record.cp and record.tp else "FAILED"
    return (
        f"channel {dim_in}->{dim_out} with {kraus_count} Kraus operator(s): {status}\n"
        f"  cp: {record.cp} (min Choi eigenvalue {record.choi_min_eig:.3e})\n"
        f"  tp: {record.tp} (defect {record.tp_defect:.3e})"
    )


def verification_frame(results: Sequence[CheckResult]) -> pd.DataFrame:
    return pd.DataFrame([r.as_dict() for r in results], columns=[
        "name", "construction", "passed", "value", "threshold", "detail",
    ])


def render_verification(results: Sequence[CheckResult], tolerance: float, seed: int) -> str:
    frame = verification_frame(results)
    table = frame[["name", "construction", "passed", "value", "threshold"]].to_string(
        index=False, float_format=lambda v: f"{v:.3e}"
    )
    failing = [r.name for r in results if not r.passed]
    return render_template(
        "verification.txt.j2",
        table=table,
        results=results,
        failing=failing,
        tolerance=tolerance,
        seed=seed,
    )


def _family_state(family: str, param: float):
    if family == "sigma-alpha":
        return examples.sigma_alpha(param)
    if family == "rho-a":
        return examples.rho_a(param)
    raise OutOfRangeError(f"unknown sweep family {family!r}, expected one of {', '.join(SWEEP_FAMILIES)}")


def sweep_frame(family: str, params: Iterable[float], tol: float) -> pd.DataFrame:
    """Bảng witness (pt_min, negativity, realignment, verdict) trên lưới tham số."""
    rows = []
    for param in params:
        report = states.analyze(_family_state(family, float(param)), tol)
        rows.append({
            "param": float(param),
            "pt_min_eigenvalue": report.pt_min_eigenvalue,
            "negativity": report.negativity,
            "realignment_value": report.realignment_value,
            "verdict": report.verdict.value,
        })
    logger.info("swept %s over %d point(s)", family, len(rows))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def export_table(frame: pd.DataFrame, path: str | Path) -> Path:
    """Ghi bảng ra .csv hoặc .xlsx (openpyxl) theo phần mở rộng."""
    path = Path(path)
    try:
        if path.suffix.lower() == ".xlsx":
            frame.to_excel(path, index=False, engine="openpyxl")
        else:
            frame.to_csv(path, index=False, encoding="utf-8")
    except OSError as exc:
        raise FileAccessError(f"cannot write {path}: {exc}") from exc
    logger.info("wrote %d row(s) to %s", len(frame), path)
    return path
