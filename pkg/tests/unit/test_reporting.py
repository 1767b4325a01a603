"""
Unit tests cho render báo cáo và bảng quét tham số.
"""

import json

import pandas as pd
import pytest

from qbec.models.report import AnalysisReport
from qbec.services import reporting, states
from qbec.services.verification import CheckResult


def test_report_dict_has_exactly_the_report_fields():
    report = states.analyze(states.max_entangled(2))

    data = reporting.report_to_dict(report)

    assert set(data) == set(AnalysisReport.__dataclass_fields__)
    assert data["verdict"] == "NPT"
    assert data["reduction_a"][0][0] == [pytest.approx(0.5), 0.0]
    json.dumps(data)


def test_render_analysis_lists_witnesses(rho_half):
    text = reporting.render_analysis(states.analyze(rho_half), source="rho.json")

    assert "state: rho.json" in text
    assert "dimensions: 3 x 3" in text
    assert "verdict: PPT_REALIGNMENT_POSITIVE" in text
    assert "realignment value: 1.00" in text


def test_render_analysis_without_realignment():
    text = reporting.render_analysis(states.analyze(states.random_state(2, 3, 6, seed=1)))

    assert "realignment value: n/a" in text


def test_sweep_frame_columns_and_values():
    frame = reporting.sweep_frame("sigma-alpha", [3.5, 4.5], tol=1e-10)

    assert list(frame.columns) == reporting.SWEEP_COLUMNS
    assert frame["verdict"].tolist()[1] == "NPT"
    assert frame["pt_min_eigenvalue"].iloc[0] >= -1e-12


@pytest.mark.parametrize("suffix", [".csv", ".xlsx"])
def test_export_table(temp_dir, suffix):
    frame = reporting.sweep_frame("rho-a", [0.25, 0.5], tol=1e-10)

    path = reporting.export_table(frame, temp_dir / f"sweep{suffix}")

    if suffix == ".csv":
        back = pd.read_csv(path)
    else:
        back = pd.read_excel(path, engine="openpyxl")
    assert len(back) == 2
    assert back["param"].tolist() == [0.25, 0.5]


def test_render_verification_lists_failing_rows():
    results = [
        CheckResult("ok_row", "something", True, 0.0, 1e-10),
        CheckResult("bad_row", "something else", False, 1.0, 1e-10, "detail text"),
    ]

    text = reporting.render_verification(results, tolerance=1e-10, seed=42)

    assert "ok_row" in text
    assert "bad_row: detail text" in text
    assert "FAILED: bad_row" in text
    assert len(reporting.verification_frame(results)) == 2
