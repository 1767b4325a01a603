"""
Unit tests cho các họ trạng thái và kênh dạng đóng.

Priority: P1
"""

import math

import numpy as np
import pytest

from qbec.core.error_handler import OutOfRangeError
from qbec.models.state import Side
from qbec.services import channels, examples, states


def _pt_min_closed_form(alpha: float) -> float:
    return (5.0 - math.sqrt((2.0 * alpha - 5.0) ** 2 + 16.0)) / 42.0


@pytest.mark.p0
@pytest.mark.parametrize("alpha", [3.0, 3.25, 3.5, 3.75, 4.0])
def test_choi_of_channel_alpha_is_sigma_alpha(alpha):
    """
    Test Description: Kênh channel_alpha có Choi state là σ_α

    Given:
    - α trong [3, 4]

    When:
    - Lấy Choi state của channel_alpha(α)

    Then:
    - Trùng σ_α trong 1e-12, cả hai reduction bằng I/3
    - Kênh trace-preserving
    """
    sigma = examples.sigma_alpha(alpha)

    c = channels.choi(examples.channel_alpha(alpha))

    np.testing.assert_allclose(c.matrix, sigma.rho, rtol=0, atol=1e-12)
    np.testing.assert_allclose(states.reduce(sigma, Side.A), np.eye(3) / 3, atol=1e-15)
    np.testing.assert_allclose(states.reduce(sigma, Side.B), np.eye(3) / 3, atol=1e-15)
    assert examples.channel_alpha(alpha).tp_defect() <= 1e-12


@pytest.mark.parametrize("alpha", [2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0])
def test_sigma_alpha_pt_spectrum_matches_closed_form(alpha):
    assert states.pt_min_eigenvalue(examples.sigma_alpha(alpha)) == pytest.approx(
        _pt_min_closed_form(alpha), abs=1e-12
    )


def test_sigma_alpha_is_ppt_on_bound_entangled_range():
    for alpha in np.linspace(3.0, 4.0, 9)[1:]:
        assert examples.in_be_range(alpha)
        assert states.pt_min_eigenvalue(examples.sigma_alpha(alpha)) >= -1e-12


def test_sigma_alpha_above_four_is_npt():
    assert states.pt_min_eigenvalue(examples.sigma_alpha(4.5)) < -1e-6
    assert not examples.in_be_range(4.5)
    assert not examples.in_be_range(3.0)


@pytest.mark.parametrize("alpha", [2.0, 3.0, 3.25, 3.5, 3.75, 4.0])
def test_swap_maps_alpha_to_five_minus_alpha(alpha):
    swapped = states.swap_subsystems(examples.sigma_alpha(alpha))

    np.testing.assert_allclose(swapped.rho, examples._sigma_alpha_matrix(5.0 - alpha), atol=1e-15)


@pytest.mark.parametrize("alpha", [1.0, 1.5])
def test_sigma_alpha_matrix_below_range_is_still_a_state(alpha):
    rho = examples._sigma_alpha_matrix(alpha)

    assert np.trace(rho).real == pytest.approx(1.0)
    assert np.linalg.eigvalsh(rho).min() >= -1e-15


def test_channel_alpha_on_ground_state():
    ground = np.diag([1.0, 0.0, 0.0])

    out = channels.apply(examples.channel_alpha(4.0), ground)

    np.testing.assert_allclose(out, np.diag([2 / 7, 4 / 7, 1 / 7]), atol=1e-15)


@pytest.mark.parametrize("alpha", [1.9, 5.1, 9.0])
def test_alpha_out_of_range(alpha):
    with pytest.raises(OutOfRangeError):
        examples.sigma_alpha(alpha)
    with pytest.raises(OutOfRangeError):
        examples.channel_alpha(alpha)


def test_rho_a_entries_at_one_half():
    rho = examples.rho_a(0.5).rho

    assert rho[0, 0].real == pytest.approx(0.1)
    assert rho[0, 4].real == pytest.approx(0.1)
    assert rho[4, 8].real == pytest.approx(0.1)
    assert rho[8, 8].real == pytest.approx(0.15)
    assert rho[6, 6].real == pytest.approx(0.15)
    assert rho[6, 8].real == pytest.approx(0.0866025404, abs=1e-10)
    assert rho[8, 0].real == pytest.approx(0.1)
    assert rho[6, 0] == 0


@pytest.mark.parametrize("a", [0.1, 0.25, 0.5, 0.75, 0.9])
def test_rho_a_is_ppt_state_with_expected_reduction(a):
    s = examples.rho_a(a)

    states.validate_state(s)
    assert states.pt_min_eigenvalue(s) >= -1e-12
    np.testing.assert_allclose(states.reduce(s, Side.A), examples.rho_a_reduction(a), atol=1e-15)


@pytest.mark.parametrize("a", [0.0, 1.0, -0.2, 1.5])
def test_rho_a_out_of_range(a):
    with pytest.raises(OutOfRangeError):
        examples.rho_a(a)


@pytest.mark.parametrize("a", [0.1, 0.5, 0.9])
def test_closed_form_channel_is_trace_preserving(a):
    ch = examples.channel_a_closed_form(a)

    assert len(ch.kraus) == 7
    assert ch.tp_defect() <= 1e-12
    assert channels.verify(ch).cp


def test_closed_form_v_and_coefficients():
    a = 0.5
    v = examples.closed_form_v(a)
    coeff = examples.closed_form_coefficients(a)

    np.testing.assert_allclose(np.diag(v).real, [1 / math.sqrt(1.5), 1 / math.sqrt(1.5), 1 / math.sqrt(2.0)])
    assert coeff["shift_from_top"] == pytest.approx(math.sqrt(0.25))
    assert coeff["w_tilde_low"] ** 2 + coeff["w_tilde_top"] ** 2 == pytest.approx(1.0 / (2 * a + 1))
