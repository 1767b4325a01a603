"""
Bộ kiểm tra chấp nhận (acceptance suite) cho toàn bộ toolkit.

Mỗi hàng kiểm tra một cấu trúc cụ thể và trả về CheckResult. Ngưỡng của mỗi
hàng tỉ lệ với `tolerance` (mặc định 1e-10): ngưỡng = hệ số của hàng ×
tolerance / 1e-10. Với tolerance cực nhỏ (1e-30) các hàng so sánh số học
sẽ thất bại, dùng làm negative control.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..models.state import Side
from . import beconstruct, channels, examples, linalg, states

logger = logging.getLogger(__name__)

BASE_TOLERANCE = 1e-10

ALPHA_GRID = (3.0, 3.25, 3.5, 3.75, 4.0)
A_GRID = (0.1, 0.25, 0.5, 0.75, 0.9)
NPT_CONTROL_ALPHA = 4.5
NPT_CONTROL_THRESHOLD = -1e-6
THETA_DEFECT_FLOOR = 1e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    construction: str
    passed: bool
    value: float
    threshold: float
    detail: str = ""

    def as_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "construction": self.construction,
            "passed": self.passed,
            "value": self.value,
            "threshold": self.threshold,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteContext:
    tolerance: float
    seed: int
    cutoff: float

    def threshold(self, factor: float) -> float:
        """factor là ngưỡng của hàng ở tolerance mặc định."""
        return factor * self.tolerance / BASE_TOLERANCE


def _diff(a: np.ndarray, b: np.ndarray) -> float:
    return linalg.max_norm(np.asarray(a) - np.asarray(b))


def check_isomorphism_round_trip(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-10)
    rng = np.random.default_rng(ctx.seed)
    worst = 0.0
    for case in range(200):
        m = int(rng.integers(2, 5))
        n = int(rng.integers(2, 5))
        count = int(rng.integers(1, m * n + 1))
        count = max(count, -(-m // n))
        ch = channels.random_channel(m, n, count, seed=ctx.seed * 1000 + case)
        c = channels.choi(ch)
        back = channels.choi(channels.channel_from_choi(c))
        worst = max(worst, _diff(back.matrix, c.matrix))
    return CheckResult(
        "isomorphism_round_trip", "state-channel isomorphism", worst <= thr, worst, thr,
        "200 seeded random channels, m,n in {2,3,4}",
    )


def check_alpha_family(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-12)
    worst = 0.0
    worst_pt = 0.0
    eye3 = np.eye(3) / 3.0
    for alpha in ALPHA_GRID:
        sigma = examples.sigma_alpha(alpha)
        worst = max(worst, _diff(channels.choi(examples.channel_alpha(alpha)).matrix, sigma.rho))
        worst = max(worst, _diff(states.reduce(sigma, Side.A), eye3))
        worst = max(worst, _diff(states.reduce(sigma, Side.B), eye3))
        if examples.in_be_range(alpha):
            worst_pt = min(worst_pt, states.pt_min_eigenvalue(sigma))
    passed = worst <= thr and worst_pt >= -thr
    return CheckResult(
        "alpha_family", "alpha-family channel and its Choi state", passed, max(worst, -worst_pt), thr,
        f"pt_min over (3,4]: {worst_pt:.3e}",
    )


def check_rho_a_pipeline(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-10)
    worst = 0.0
    min_theta_defect = np.inf
    for a in A_GRID:
        rho = examples.rho_a(a)
        states.validate_state(rho)
        worst = max(worst, -min(states.pt_min_eigenvalue(rho), 0.0))
        worst = max(worst, _diff(states.reduce(rho, Side.A), examples.rho_a_reduction(a)))
        report = beconstruct.construction_report(rho, Side.A, ctx.cutoff)
        worst = max(worst, report.channel_tp_defect)
        min_theta_defect = min(min_theta_defect, report.theta_tp_defect)
        sigma = report.filtered.sigma
        worst = max(worst, _diff(channels.choi(report.channel).matrix, sigma.rho))
        worst = max(worst, _diff(states.reduce(sigma, Side.A), np.eye(report.filtered.r) / report.filtered.r))
    passed = worst <= thr and min_theta_defect > THETA_DEFECT_FLOOR
    return CheckResult(
        "rho_a_pipeline", "filtering and channel recovery", passed, worst, thr,
        f"min Θ defect {min_theta_defect:.3e} (> {THETA_DEFECT_FLOOR})",
    )


def check_closed_form(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-9)
    rho = examples.rho_a(0.5)
    built = channels.choi(beconstruct.be_channel_A(rho, ctx.cutoff)).matrix
    closed = channels.choi(examples.channel_a_closed_form(0.5)).matrix
    value = _diff(built, closed)
    return CheckResult("closed_form_channel", "closed-form channel", value <= thr, value, thr, "a = 0.5")


def check_support_lemma(ctx: SuiteContext) -> CheckResult:
    failures = 0
    for case in range(200):
        rank = case % 9 + 1
        s = states.random_state(3, 3, rank, seed=ctx.seed * 1000 + case)
        if not states.support_inclusion_holds(s, ctx.cutoff):
            failures += 1
    return CheckResult(
        "support_lemma", "support inclusion", failures == 0, float(failures), 0.0,
        "200 random 3x3 states, ranks 1..9",
    )


def check_characterization(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-12)
    c = channels.choi(examples.channel_alpha(3.5)).state
    pt_min = states.pt_min_eigenvalue(c)
    realign = states.realignment_value(c)
    return CheckResult(
        "choi_state_ppt", "channel characterization via its Choi state", pt_min >= -thr, pt_min, -thr,
        f"realignment value {realign:.12f} (recorded, not asserted)",
    )


def check_witness_sanity(ctx: SuiteContext) -> CheckResult:
    thr = ctx.threshold(1e-10)
    worst = 0.0
    for case in range(100):
        s = states.random_separable_state(3, 3, terms=1 + case % 5, seed=ctx.seed * 1000 + case)
        worst = max(worst, states.negativity(s))
    singlet = states.max_entangled(3)
    worst = max(worst, abs(states.negativity(singlet) - 1.0))
    worst = max(worst, abs(states.realignment_value(singlet) - 3.0))
    return CheckResult(
        "witness_sanity", "negativity and realignment oracles", worst <= thr, worst, thr,
        "100 separable mixtures plus singlet oracles",
    )


def check_negative_control(ctx: SuiteContext) -> CheckResult:
    value = states.pt_min_eigenvalue(examples.sigma_alpha(NPT_CONTROL_ALPHA))
    return CheckResult(
        "npt_control", "alpha family outside the bound entangled range",
        value < NPT_CONTROL_THRESHOLD, value, NPT_CONTROL_THRESHOLD,
        f"alpha = {NPT_CONTROL_ALPHA}",
    )


CHECKS: tuple[Callable[[SuiteContext], CheckResult], ...] = (
    check_isomorphism_round_trip,
    check_alpha_family,
    check_rho_a_pipeline,
    check_closed_form,
    check_support_lemma,
    check_characterization,
    check_witness_sanity,
    check_negative_control,
)


def _run_one(check: Callable[[SuiteContext], CheckResult], ctx: SuiteContext) -> CheckResult:
    try:
        result = check(ctx)
    except Exception as exc:  # một hàng lỗi không được làm dừng cả bộ kiểm tra
        logger.error("check %s raised: %s", check.__name__, exc, exc_info=True)
        return CheckResult(check.__name__, "error", False, float("nan"), float("nan"), str(exc))
    logger.info("check %s: %s", result.name, "pass" if result.passed else "FAIL")
    return result


def run_suite(
    tolerance: float = BASE_TOLERANCE,
    seed: int = 42,
    cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF,
    jobs: int = 1,
) -> list[CheckResult]:
    """Chạy toàn bộ các hàng; kết quả luôn theo thứ tự CHECKS."""
    ctx = SuiteContext(tolerance=tolerance, seed=seed, cutoff=cutoff)
    if jobs <= 1:
        return [_run_one(check, ctx) for check in CHECKS]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda check: _run_one(check, ctx), CHECKS))
