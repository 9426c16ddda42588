"""Qutrit family: closed forms, dual-path sweeps, winding, singular points."""

import math

import numpy as np
import pytest

from triphase import (
    FamilyParams,
    GridTooCoarseError,
    angle_dist,
    build_family_states,
    closed_form_phase,
    dicke_embed,
    family_qubits,
    slope_profile,
    state_to_points,
    sweep_alpha,
    symmetrize_full,
    three_vertex_phase,
)

PI = math.pi


def test_family_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(theta=PI / 2, phi=0.0)
    p = FamilyParams(theta=0.3, phi=-PI / 2, alpha=3 * PI)
    assert p.phi == pytest.approx(3 * PI / 2)
    assert p.alpha == pytest.approx(PI)


def test_constellation_points_at_plus_minus_half_angle():
    psi1, _, _ = build_family_states(FamilyParams(theta=0.5, phi=PI / 4, alpha=0.0))
    pts = sorted(state_to_points(psi1).points, key=lambda p: p.azimuth)
    assert pts[0].polar == pytest.approx(PI / 2, abs=1e-9)
    assert pts[1].polar == pytest.approx(PI / 2, abs=1e-9)
    assert pts[0].azimuth == pytest.approx(PI / 4, abs=1e-9)
    assert pts[1].azimuth == pytest.approx(2 * PI - PI / 4, abs=1e-9)


def test_theta_zero_makes_fixed_states_coincide():
    _, psi2, psi3 = build_family_states(FamilyParams(theta=0.0, phi=1.0))
    expected = [0.5, 1 / math.sqrt(2.0), 0.5]
    assert np.allclose(psi2.amplitudes, expected, atol=1e-12)
    assert np.allclose(psi3.amplitudes, expected, atol=1e-12)


def test_rotation_consistency_against_permutation_oracle():
    # rotating both qubits of the alpha = 0 state must reproduce the
    # parameterized qubits, checked in the raw two-qubit space
    theta, phi, alpha = 0.4, 1.1, 2.3
    base = FamilyParams(theta, phi, 0.0)
    rotated = FamilyParams(theta, phi, alpha)
    u = np.diag([np.exp(-0.5j * alpha), np.exp(0.5j * alpha)])
    q11, q12, _, _ = family_qubits(base)
    r11, r12, _, _ = family_qubits(rotated)
    lhs = np.kron(u, u) @ symmetrize_full([q11, q12])
    rhs = symmetrize_full([r11, r12])
    assert np.allclose(lhs, rhs, atol=1e-12)
    # and the library state is that same ray
    psi1 = build_family_states(rotated)[0]
    embedded = dicke_embed(psi1)
    cos = abs(np.vdot(embedded, rhs)) / np.linalg.norm(rhs)
    assert cos == pytest.approx(1.0, abs=1e-12)


def test_closed_form_zero_rotation_cancels_exactly():
    for theta, phi in [(0.3, 0.9), (-0.7, 2.0), (1.2, 5.5)]:
        g1, g2, total = closed_form_phase(FamilyParams(theta, phi, 0.0))
        assert g1 == -g2
        assert total == 0.0


def test_closed_form_specific_value_against_pipeline():
    p = FamilyParams(theta=PI / 3, phi=PI / 4, alpha=PI / 2)
    g1, g2, total = closed_form_phase(p)
    assert g1 == pytest.approx(2 * math.atan(math.tan(PI / 6) * math.tan(3 * PI / 8)))
    assert g2 == pytest.approx(2 * math.atan(math.tan(PI / 6) * math.tan(PI / 8)))
    psi1, psi2, psi3 = build_family_states(p)
    assert angle_dist(total, three_vertex_phase(psi1, psi2, psi3)) < 1e-12


def test_closed_form_vanishes_with_theta():
    for alpha in np.linspace(0, 2 * PI, 7):
        assert closed_form_phase(FamilyParams(0.0, 1.0, float(alpha)))[2] == 0.0


def test_closed_form_pole_reaches_plus_minus_pi():
    # (phi + alpha)/2 lands on the float closest to pi/2
    p = FamilyParams(theta=0.8, phi=PI / 2, alpha=PI / 2)
    g1, _, _ = closed_form_phase(p)
    assert abs(g1) == pytest.approx(PI, abs=1e-9)


def test_closed_form_odd_in_alpha_and_theta():
    for theta, phi, alpha in [(0.5, 1.0, 0.7), (0.9, 2.4, 2.9), (-0.2, 0.3, 4.4)]:
        plus = closed_form_phase(FamilyParams(theta, phi, alpha))[2]
        minus = closed_form_phase(FamilyParams(theta, phi, -alpha))[2]
        assert angle_dist(plus, -minus) < 1e-9
        flipped = closed_form_phase(FamilyParams(-theta, phi, alpha))[2]
        assert angle_dist(plus, -flipped) < 1e-9


def test_sweep_validation():
    with pytest.raises(ValueError):
        sweep_alpha(0.5, 1.0, 32)
    with pytest.raises(ValueError):
        sweep_alpha(0.0, 1.0, 128)


def test_sweep_grid_too_coarse_for_extreme_theta():
    with pytest.raises(GridTooCoarseError):
        sweep_alpha(1e-7, PI / 4, 64)


def test_sweep_dual_path_and_invariants():
    result = sweep_alpha(PI / 6, PI / 4, 512)
    assert result.alphas.size == 513
    assert np.max(angle_dist(result.gamma_wrapped, result.gamma_pipeline_wrapped)) < 1e-8
    # unwrapped total differs from the wrapped series by exact turns
    turns = (result.gamma_total - result.gamma_wrapped) / (2 * PI)
    assert np.max(np.abs(turns - np.round(turns))) < 1e-9
    assert np.max(np.abs(np.diff(result.gamma_total))) < PI
    assert result.winding == pytest.approx(4 * PI, abs=1e-6)


def test_sweep_detects_both_singular_points():
    result = sweep_alpha(PI / 6, PI / 4, 1000)
    spacing = 2 * PI / 1000
    assert len(result.singular_alphas) == 2
    assert abs(result.singular_alphas[0] - 3 * PI / 4) <= spacing
    assert abs(result.singular_alphas[1] - 5 * PI / 4) <= spacing


def test_sweep_theta_sign_flip_negates_everything():
    plus = sweep_alpha(PI / 6, PI / 4, 256)
    minus = sweep_alpha(-PI / 6, PI / 4, 256)
    assert np.allclose(plus.alphas, minus.alphas)
    assert np.max(angle_dist(plus.gamma1, -minus.gamma1)) < 1e-9
    assert np.max(angle_dist(plus.gamma2, -minus.gamma2)) < 1e-9
    assert minus.winding == pytest.approx(-plus.winding, abs=1e-9)


def test_sweep_winding_across_parameters():
    for theta, phi in [(PI / 3, PI / 4), (PI / 6, 1.0), (PI / 12, 2.2), (0.7, 5.9), (1.1, 0.3)]:
        result = sweep_alpha(theta, phi, 256)
        assert result.winding == pytest.approx(4 * PI, abs=1e-6), (theta, phi)


def test_slope_profile_monotone_and_analytic():
    thetas = [PI / 3, PI / 6, PI / 12]
    slopes = slope_profile(thetas, PI / 4, 4096)
    assert slopes[0] < slopes[1] < slopes[2]
    for theta, slope in zip(thetas, slopes):
        assert slope == pytest.approx(1.0 / math.tan(theta / 2), abs=1e-3)
    with pytest.raises(ValueError):
        slope_profile([-0.1], PI / 4, 128)


def test_slope_profile_flattens_toward_wide_angles():
    (slope,) = slope_profile([1.55], PI / 4, 2048)
    assert slope == pytest.approx(1.0 / math.tan(1.55 / 2), abs=1e-3)
    assert slope < 1.1
