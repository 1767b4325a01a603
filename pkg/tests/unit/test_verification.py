"""
Unit tests cho bộ kiểm tra chấp nhận.

Priority: P1
"""

import pytest

from qbec.services import verification


@pytest.fixture
def default_ctx():
    return verification.SuiteContext(tolerance=1e-10, seed=42, cutoff=1e-10)


@pytest.mark.p1
@pytest.mark.parametrize(
    "check",
    [
        verification.check_alpha_family,
        verification.check_rho_a_pipeline,
        verification.check_closed_form,
        verification.check_characterization,
        verification.check_negative_control,
    ],
)
def test_fast_checks_pass_at_default_tolerance(check, default_ctx):
    result = check(default_ctx)

    assert result.passed, result


@pytest.mark.p1
@pytest.mark.parametrize("seed", [42, 7])
def test_support_check_is_robust_to_seed(seed):
    ctx = verification.SuiteContext(tolerance=1e-10, seed=seed, cutoff=1e-10)

    assert verification.check_support_lemma(ctx).passed


def test_tiny_tolerance_makes_rows_fail():
    ctx = verification.SuiteContext(tolerance=1e-30, seed=42, cutoff=1e-10)

    assert not verification.check_rho_a_pipeline(ctx).passed
    assert not verification.check_closed_form(ctx).passed


def test_run_suite_keeps_order_with_threads(monkeypatch):
    monkeypatch.setattr(
        verification,
        "CHECKS",
        (verification.check_negative_control, verification.check_closed_form, verification.check_alpha_family),
    )

    results = verification.run_suite(jobs=3)

    assert [r.name for r in results] == ["npt_control", "closed_form_channel", "alpha_family"]
    assert all(r.passed for r in results)


def test_a_raising_check_is_reported_as_failure(monkeypatch):
    def explodes(ctx):
        raise RuntimeError("boom")

    monkeypatch.setattr(verification, "CHECKS", (explodes,))

    (result,) = verification.run_suite()

    assert not result.passed
    assert result.detail == "boom"
