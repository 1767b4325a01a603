"""
Các lệnh CLI. Mỗi lệnh trả về exit code và được bọc bởi `handle_errors`.

Báo cáo ra stdout; log và chẩn đoán ra stderr.
"""

from __future__ import annotations

import logging
import sys

import numpy as np

from ..core.error_handler import EXIT_DOMAIN, EXIT_OK, OutOfRangeError, handle_errors, json_dumps
from ..models.channel import KrausChannel
from ..models.state import BipartiteState, Side
from ..services import beconstruct, channels, examples, linalg, reporting, states, verification
from .files import (
    channel_to_dict,
    encode_json,
    read_channel,
    read_state,
    state_to_dict,
    write_channel,
    write_state,
)

logger = logging.getLogger(__name__)

EXAMPLE_NAMES = ("sigma-alpha", "channel-alpha", "rho-a", "channel-a")


def _emit_object(obj: BipartiteState | KrausChannel, out: str | None) -> None:
    """Ghi ra file nếu có `out`, không thì in JSON ra stdout."""
    if isinstance(obj, KrausChannel):
        if out:
            write_channel(obj, out)
        else:
            print(encode_json(channel_to_dict(obj)))
    else:
        if out:
            write_state(obj, out)
        else:
            print(encode_json(state_to_dict(obj)))
    if out:
        logger.info("wrote %s", out)


@handle_errors
def cmd_analyze(path: str, tolerance: float = linalg.DEFAULT_HERMITIAN_TOL, as_json: bool = False) -> int:
    """Phân tích một file trạng thái và in AnalysisReport."""
    state = read_state(path)
    report = states.analyze(state, tolerance)
    if as_json:
        print(json_dumps(reporting.report_to_dict(report)))
    else:
        print(reporting.render_analysis(report, source=str(path)))
    return EXIT_OK


@handle_errors
def cmd_state_to_channel(
    path: str,
    side: str = "A",
    out: str | None = None,
    tolerance: float = linalg.DEFAULT_HERMITIAN_TOL,
    cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF,
    as_json: bool = False,
) -> int:
    """
    Dựng kênh Λ_A hoặc Λ_B từ file trạng thái.

    Kênh luôn được ghi ra; exit 1 khi kênh không CP/TP hoặc Choi state của nó
    lệch khỏi trạng thái đã lọc quá tolerance.
    """
    state = read_state(path)
    report = beconstruct.construction_report(state, Side(side.upper()), cutoff)
    record = channels.verify(report.channel, tolerance)
    expected = beconstruct.expected_choi(report.filtered)
    choi_error = linalg.max_norm(channels.choi(report.channel).matrix - expected.rho)
    ok = record.cp and record.tp and choi_error <= tolerance

    _emit_object(report.channel, out)
    summary = {
        **record.as_dict(),
        "choi_error": choi_error,
        "rank": report.filtered.r,
        "theta_tp_defect": report.theta_tp_defect,
        "filter_tp_defect": report.filter_tp_defect,
    }
    stream = sys.stdout if out else sys.stderr
    if as_json:
        print(json_dumps(summary), file=stream)
    else:
        ch = report.channel
        print(reporting.render_channel_verification(record, ch.dim_in, ch.dim_out, len(ch.kraus)), file=stream)
        print(f"  choi error: {choi_error:.3e} (rank {report.filtered.r})", file=stream)

    if not ok:
        print(
            f"error [VERIFICATION_FAILED]: channel verification failed at tolerance {tolerance:.1e}",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    return EXIT_OK


@handle_errors
def cmd_channel_to_state(path: str, out: str | None = None, tolerance: float = linalg.DEFAULT_HERMITIAN_TOL) -> int:
    """Ghi Choi state của kênh; trace bằng 1 khi và chỉ khi kênh trace-preserving."""
    ch = read_channel(path)
    c = channels.choi(ch)
    trace = float(np.trace(c.matrix).real)
    if ch.tp_defect() > tolerance:
        logger.warning("channel is not trace-preserving: Choi state has trace %.12g", trace)
    _emit_object(c.state, out)
    return EXIT_OK


def build_example(name: str, param: float) -> BipartiteState | KrausChannel:
    if name == "sigma-alpha":
        return examples.sigma_alpha(param)
    if name == "channel-alpha":
        return examples.channel_alpha(param)
    if name == "rho-a":
        return examples.rho_a(param)
    if name == "channel-a":
        return examples.channel_a_closed_form(param)
    raise OutOfRangeError(f"unknown example {name!r}, expected one of {', '.join(EXAMPLE_NAMES)}")


@handle_errors
def cmd_example(name: str, param: float, out: str | None = None) -> int:
    """Ghi trạng thái hoặc kênh dạng đóng theo tên."""
    _emit_object(build_example(name, param), out)
    return EXIT_OK


@handle_errors
def cmd_sweep(
    family: str,
    start: float,
    stop: float,
    num: int,
    out: str | None = None,
    tolerance: float = linalg.DEFAULT_HERMITIAN_TOL,
    as_json: bool = False,
) -> int:
    """Bảng witness trên lưới tham số đều; xuất .csv/.xlsx nếu có `out`."""
    if num < 1:
        raise OutOfRangeError(f"num must be positive, got {num}")
    frame = reporting.sweep_frame(family, np.linspace(start, stop, num), tolerance)
    if out:
        reporting.export_table(frame, out)
    if as_json:
        print(json_dumps({"family": family, "rows": frame.to_dict(orient="records")}))
    else:
        print(frame.to_string(index=False))
    return EXIT_OK


@handle_errors
def cmd_verify(
    tolerance: float = verification.BASE_TOLERANCE,
    seed: int = 42,
    cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF,
    jobs: int = 1,
    as_json: bool = False,
) -> int:
    """Chạy bộ kiểm tra chấp nhận; exit 0 khi và chỉ khi mọi hàng pass."""
    results = verification.run_suite(tolerance=tolerance, seed=seed, cutoff=cutoff, jobs=jobs)
    if as_json:
        print(json_dumps({
            "tolerance": tolerance,
            "seed": seed,
            "passed": all(r.passed for r in results),
            "checks": [r.as_dict() for r in results],
        }))
    else:
        print(reporting.render_verification(results, tolerance, seed))

    failing = [r.name for r in results if not r.passed]
    if failing:
        print(f"error [VERIFICATION_FAILED]: failing checks: {', '.join(failing)}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK

