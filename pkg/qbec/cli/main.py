"""
Entry point dòng lệnh.

Sử dụng:
    # Phân tích một trạng thái
    qbec analyze state.json

    # Dựng kênh từ trạng thái (side A hoặc B)
    qbec state-to-channel state.json --side A -o channel.json

    # Choi state của một kênh
    qbec channel-to-state channel.json -o state.json

    # Ghi trạng thái/kênh dạng đóng
    qbec example sigma-alpha 3.5 -o sigma.json

    # Quét tham số, xuất CSV/XLSX
    qbec sweep sigma-alpha 3 4 11 -o sweep.xlsx

    # Bộ kiểm tra chấp nhận
    qbec verify --jobs 4
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from ..core.config import load_settings
from ..core.error_handler import AppError, error_payload
from ..core.logging_config import setup_logging
from ..services.reporting import SWEEP_FAMILIES
from . import commands


def _common_parser() -> argparse.ArgumentParser:
    """Các flag dùng chung; giá trị None nghĩa là lấy từ Settings."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None, help="Tolerance số học (mặc định 1e-10)")
    common.add_argument("--cutoff", type=float, default=None, help="Ngưỡng support tương đối (mặc định 1e-10)")
    common.add_argument("--seed", type=int, default=None, help="Seed cho các phép quét ngẫu nhiên (mặc định 42)")
    common.add_argument("--json", dest="as_json", action="store_true", help="In kết quả dạng một JSON object")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="qbec",
        description="Toolkit cho đẳng cấu trạng thái-kênh và kênh binding entanglement",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    subparsers = parser.add_subparsers(dest="command", help="Lệnh cần thực thi")

    analyze = subparsers.add_parser("analyze", parents=[common], help="Phân tích một file trạng thái")
    analyze.add_argument("path", help="File JSON của trạng thái")

    to_channel = subparsers.add_parser(
        "state-to-channel", parents=[common], help="Dựng kênh binding-entanglement từ trạng thái"
    )
    to_channel.add_argument("path", help="File JSON của trạng thái")
    to_channel.add_argument("--side", choices=["A", "B"], default="A", help="Hệ được lọc (mặc định A)")
    to_channel.add_argument("--out", "-o", help="File JSON cho kênh (mặc định stdout)")

    to_state = subparsers.add_parser("channel-to-state", parents=[common], help="Choi state của một kênh")
    to_state.add_argument("path", help="File JSON của kênh")
    to_state.add_argument("--out", "-o", help="File JSON cho trạng thái (mặc định stdout)")

    example = subparsers.add_parser("example", parents=[common], help="Ghi trạng thái hoặc kênh dạng đóng")
    example.add_argument("name", choices=list(commands.EXAMPLE_NAMES))
    example.add_argument("param", type=float, help="α cho sigma/channel-alpha, a cho rho-a/channel-a")
    example.add_argument("--out", "-o", help="File JSON output (mặc định stdout)")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Bảng witness trên lưới tham số")
    sweep.add_argument("family", choices=list(SWEEP_FAMILIES))
    sweep.add_argument("start", type=float)
    sweep.add_argument("stop", type=float)
    sweep.add_argument("num", type=int)
    sweep.add_argument("--out", "-o", help="File .csv hoặc .xlsx")

    verify = subparsers.add_parser("verify", parents=[common], help="Chạy bộ kiểm tra chấp nhận")
    verify.add_argument("--jobs", type=int, default=None, help="Số thread chạy các hàng kiểm tra")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 0

    try:
        settings = load_settings()
    except AppError as exc:
        payload = error_payload(exc)
        print(f"error [{payload['error_code']}]: {payload['error']}", file=sys.stderr)
        return exc.exit_code

    setup_logging(args.log_level or settings.log_level)
    tolerance = args.tolerance if args.tolerance is not None else settings.tolerance
    cutoff = args.cutoff if args.cutoff is not None else settings.cutoff
    seed = args.seed if args.seed is not None else settings.seed

    if args.command == "analyze":
        return commands.cmd_analyze(args.path, tolerance=tolerance, as_json=args.as_json)
    if args.command == "state-to-channel":
        return commands.cmd_state_to_channel(
            args.path, side=args.side, out=args.out, tolerance=tolerance, cutoff=cutoff, as_json=args.as_json
        )
    if args.command == "channel-to-state":
        return commands.cmd_channel_to_state(args.path, out=args.out, tolerance=tolerance)
    if args.command == "example":
        return commands.cmd_example(args.name, args.param, out=args.out)
    if args.command == "sweep":
        return commands.cmd_sweep(
            args.family, args.start, args.stop, args.num, out=args.out, tolerance=tolerance, as_json=args.as_json
        )
    if args.command == "verify":
        jobs = args.jobs if args.jobs is not None else settings.jobs
        return commands.cmd_verify(tolerance=tolerance, seed=seed, cutoff=cutoff, jobs=jobs, as_json=args.as_json)

    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
