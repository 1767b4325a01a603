"""
Cấu hình logging cơ bản cho toolkit.

Log luôn ghi ra stderr để stdout chỉ chứa báo cáo.
"""

import logging
import sys


def setup_logging(level: str = "WARNING") -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
