import math

import numpy as np
import pytest

from jcpairs import (
    JCParams,
    ZeroInterval,
    esd_boundary_phi_AB,
    resonance_values,
    sweep,
    zero_intervals,
)

G = 2.0


def closed_curves(kind, alpha, pair="AB"):
    def curve(t):
        return resonance_values(kind, alpha, G, t).concurrence[pair]

    def q_curve(t):
        return resonance_values(kind, alpha, G, t).q_for(pair)

    return curve, q_curve


def test_boundary_known_value():
    lo, hi = esd_boundary_phi_AB(np.pi / 8)
    # root of tan(alpha) = sin^2(Gt/2), checked against independent bisection
    target = math.tan(np.pi / 8)
    a, b = 1.0, 2.0
    for _ in range(80):
        mid = 0.5 * (a + b)
        if math.sin(mid / 2) ** 2 > target:
            b = mid
        else:
            a = mid
    assert lo == pytest.approx(a, abs=1e-9)
    assert lo == pytest.approx(1.398370, abs=1e-6)
    assert hi == pytest.approx(2 * np.pi - lo, abs=1e-12)


def test_boundary_degenerates_at_quarter_pi():
    lo, hi = esd_boundary_phi_AB(np.pi / 4 - 1e-9)
    assert lo == pytest.approx(np.pi, abs=1e-3)
    assert hi == pytest.approx(np.pi, abs=1e-3)
    assert esd_boundary_phi_AB(np.pi / 4) is None
    assert esd_boundary_phi_AB(0.3 * np.pi) is None


def test_boundary_rejects_out_of_range():
    for alpha in (-0.1, 0.0, np.pi / 2, 2.0):
        with pytest.raises(ValueError, match="alpha"):
            esd_boundary_phi_AB(alpha)


def test_zero_intervals_phi_death_window():
    alpha = np.pi / 8
    curve, q_curve = closed_curves("phi", alpha)
    intervals = zero_intervals(curve, 0.0, 2 * np.pi / G, q_curve=q_curve, samples=1025)
    assert len(intervals) == 1
    (iv,) = intervals
    assert iv.kind == "sudden_death"
    lo, hi = esd_boundary_phi_AB(alpha)
    assert iv.t_lo * G == pytest.approx(lo, abs=1e-6)
    assert iv.t_hi * G == pytest.approx(hi, abs=1e-6)


@pytest.mark.parametrize("alpha", np.linspace(0.05, 0.78, 10))
def test_zero_intervals_match_boundary(alpha):
    curve, q_curve = closed_curves("phi", alpha)
    intervals = zero_intervals(curve, 0.0, 2 * np.pi / G, q_curve=q_curve, samples=2049)
    deaths = [iv for iv in intervals if iv.kind == "sudden_death"]
    assert len(deaths) == 1
    lo, hi = esd_boundary_phi_AB(alpha)
    assert deaths[0].t_lo * G == pytest.approx(lo, abs=1e-6)
    assert deaths[0].t_hi * G == pytest.approx(hi, abs=1e-6)


@pytest.mark.parametrize("alpha", [np.pi / 4, np.pi / 3])
def test_zero_intervals_touch_only_above_quarter_pi(alpha):
    curve, q_curve = closed_curves("phi", alpha)
    intervals = zero_intervals(curve, 0.0, 4 * np.pi / G, q_curve=q_curve, samples=2049)
    assert intervals, "the curve does reach zero"
    assert all(iv.kind == "touch" for iv in intervals)
    # touches sit at odd multiples of pi in Gt
    touched = sorted(0.5 * (iv.t_lo + iv.t_hi) * G for iv in intervals)
    assert len(touched) == 2
    assert touched[0] == pytest.approx(np.pi, abs=1e-2)
    assert touched[1] == pytest.approx(3 * np.pi, abs=1e-2)


def test_zero_intervals_psi_never_dies():
    for alpha in (0.2, np.pi / 4, 1.1):
        for pair in ("AB", "ab", "Aa", "Bb", "Ab", "Ba"):
            curve, q_curve = closed_curves("psi", alpha, pair)
            intervals = zero_intervals(curve, 0.0, 4 * np.pi / G, q_curve=q_curve, samples=1025)
            assert all(iv.kind != "sudden_death" for iv in intervals)


def test_zero_intervals_degenerate_curve():
    curve, q_curve = closed_curves("phi", 0.0)  # product state: C^AB identically zero
    intervals = zero_intervals(curve, 0.0, 3.0, q_curve=q_curve)
    assert intervals == [ZeroInterval(t_lo=0.0, t_hi=3.0, kind="degenerate")]


def test_zero_intervals_width_fallback_without_q():
    plateau = zero_intervals(lambda t: max(0.0, abs(t - 1.0) - 0.2), 0.0, 2.0, samples=801)
    assert [iv.kind for iv in plateau] == ["sudden_death"]
    assert plateau[0].t_lo == pytest.approx(0.8, abs=1e-6)
    assert plateau[0].t_hi == pytest.approx(1.2, abs=1e-6)
    pin = zero_intervals(lambda t: abs(t - 1.0), 0.0, 2.0, samples=801)
    assert [iv.kind for iv in pin] == ["touch"]


def test_zero_intervals_window_edges():
    # phi cavity pair starts its death window at t = 0
    curve, q_curve = closed_curves("phi", np.pi / 8, "ab")
    intervals = zero_intervals(curve, 0.0, 2 * np.pi / G, q_curve=q_curve, samples=1025)
    deaths = [iv for iv in intervals if iv.kind == "sudden_death"]
    assert deaths[0].t_lo == 0.0
    lo, _ = esd_boundary_phi_AB(np.pi / 8)
    # the ab window is the AB window shifted left by pi: it ends at pi - lo... mirrored
    assert deaths[0].t_hi * G == pytest.approx(2 * np.pi - (lo + np.pi), abs=1e-6)


def test_zero_intervals_rejects_nonfinite():
    with pytest.raises(ValueError, match="non-finite"):
        zero_intervals(lambda t: float("nan"), 0.0, 1.0, samples=11)


def test_zero_intervals_rejects_bad_window():
    with pytest.raises(ValueError, match="t_max"):
        zero_intervals(lambda t: 1.0, 1.0, 1.0)


def make_params():
    return JCParams(omega0=5.0, omega=5.0, g=1.0)


def test_sweep_corner_values():
    params = make_params()
    res = sweep("phi", "AB", [0.0, np.pi / 4], [0.0, np.pi / G], params, "closed")
    assert np.allclose(res.concurrence, [[0.0, 0.0], [1.0, 0.0]], atol=1e-14)
    assert res.esd_map.zero_mask.tolist() == [[True, True], [False, True]]


def test_sweep_mask_matches_q_sign():
    params = make_params()
    alpha_grid = np.linspace(0.0, np.pi / 2, 101)
    t_grid = np.linspace(0.0, 2 * np.pi / G, 201)
    res = sweep("phi", "AB", alpha_grid, t_grid, params, "closed", zero_tol=1e-12)
    # C = 2 max(0, Q) <= tol exactly when Q <= tol/2
    assert np.array_equal(res.esd_map.zero_mask, res.q <= 0.5e-12)


def test_sweep_engines_agree():
    params = make_params()
    alpha_grid = np.linspace(0.0, np.pi / 2, 5)
    t_grid = np.linspace(0.0, 2 * np.pi / G, 9)
    for pair in ("AB", "Ab"):
        closed = sweep("phi", pair, alpha_grid, t_grid, params, "closed")
        analytic = sweep("phi", pair, alpha_grid, t_grid, params, "analytic")
        numeric = sweep("phi", pair, alpha_grid, t_grid, params, "numeric")
        assert np.max(np.abs(closed.concurrence - analytic.concurrence)) <= 1e-9
        assert np.max(np.abs(closed.concurrence - numeric.concurrence)) <= 1e-9
        assert np.array_equal(closed.esd_map.zero_mask, analytic.esd_map.zero_mask)
        assert np.array_equal(closed.esd_map.zero_mask, numeric.esd_map.zero_mask)


def test_sweep_cross_pair_death_cells():
    # the A-b map has death cells exactly where |sin Gt| outruns 2|tan alpha|
    params = make_params()
    alpha_grid = np.linspace(0.02, np.pi / 2 - 0.02, 21)
    t_grid = np.linspace(0.0, 2 * np.pi / G, 41)
    res = sweep("phi", "Ab", alpha_grid, t_grid, params, "closed")
    for ia, alpha in enumerate(alpha_grid):
        for it, t in enumerate(t_grid):
            sin_gt = abs(math.sin(G * t))
            expected = sin_gt <= 1e-9 or 2 * abs(math.tan(alpha)) <= sin_gt + 1e-9
            if abs(2 * abs(math.tan(alpha)) - sin_gt) > 1e-6:  # skip knife-edge cells
                assert bool(res.esd_map.zero_mask[ia, it]) == expected


def test_sweep_boundary_attachment():
    params = make_params()
    alpha_grid = np.linspace(0.05, 0.6, 6)
    res = sweep("phi", "AB", alpha_grid, np.linspace(0.0, 3.0, 7), params, "closed")
    below = alpha_grid[alpha_grid < np.pi / 4]
    assert res.esd_map.boundary.shape == (below.size, 3)
    for alpha, lo, hi in res.esd_map.boundary:
        assert (lo, hi) == pytest.approx(esd_boundary_phi_AB(alpha))
    psi_res = sweep("psi", "AB", alpha_grid, np.linspace(0.0, 3.0, 7), params, "closed")
    assert psi_res.esd_map.boundary is None


def test_sweep_validations():
    params = make_params()
    with pytest.raises(ValueError, match="non-empty"):
        sweep("phi", "AB", [], [0.0, 1.0], params, "closed")
    with pytest.raises(ValueError, match="increasing"):
        sweep("phi", "AB", [0.5, 0.1], [0.0, 1.0], params, "closed")
    with pytest.raises(ValueError, match="engine"):
        sweep("phi", "AB", [0.1], [0.0, 1.0], params, "spectral")
    detuned = JCParams(omega0=5.0, omega=6.0, g=1.0)
    with pytest.raises(ValueError, match="resonance"):
        sweep("phi", "AB", [0.1], [0.0, 1.0], detuned, "closed")
