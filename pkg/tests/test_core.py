"""Grid, packet construction, transforms, moments, trajectories."""

import math

import numpy as np
import pytest

from wavefall import (
    BadSigma,
    Grid,
    GridMismatch,
    GridOverflow,
    PhysicalParams,
    Trajectory,
    WavePacket,
    l2_distance,
    make_gaussian,
    moments,
    overlap,
    to_momentum,
    to_position,
)
from wavefall.core import boundary_amplitude, check_margin, margin_nodes


def test_grid_nodes_and_spacing():
    g = Grid(-10.0, 10.0, 64)
    assert g.dx == pytest.approx(20.0 / 64)
    assert g.x[0] == -10.0
    # x_max is the wrap point, not a node
    assert g.x[-1] == pytest.approx(10.0 - g.dx)
    assert g.k[0] == 0.0
    assert g.dk == pytest.approx(2 * math.pi / 20.0)


def test_grid_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Grid(-1.0, -2.0, 64)
    with pytest.raises(ValueError):
        Grid(-1.0, 1.0, 100)  # not a power of two
    with pytest.raises(ValueError):
        Grid(-1.0, 1.0, 4)  # below the minimum


def test_grid_arrays_are_readonly():
    g = Grid(-10.0, 10.0, 64)
    with pytest.raises(ValueError):
        g.x[0] = 99.0
    with pytest.raises(ValueError):
        g.k[0] = 99.0


def test_params_positivity():
    with pytest.raises(ValueError):
        PhysicalParams(hbar=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(m=-1.0)
    with pytest.raises(ValueError):
        PhysicalParams(c=0.0)
    # g may carry any sign
    PhysicalParams(g=-3.0)
    PhysicalParams(g=0.0)


def test_wavepacket_amp_is_copied_and_readonly(grid):
    raw = np.ones(grid.n, dtype=complex)
    psi = WavePacket(grid, raw)
    raw[0] = 0.0
    assert psi.amp[0] == 1.0
    with pytest.raises(ValueError):
        psi.amp[0] = 2.0


def test_gaussian_is_normalized_with_requested_moments(grid, params):
    psi = make_gaussian(grid, 1.5, 0.75, 1.2, params)
    assert psi.norm == pytest.approx(1.0, abs=1e-12)
    m = moments(psi, params)
    assert m.mean_x == pytest.approx(1.5, abs=1e-9)
    assert m.mean_p == pytest.approx(0.75, abs=1e-9)
    assert m.sigma_x == pytest.approx(1.2, abs=1e-9)
    # minimum-uncertainty packet: sigma_p = hbar / (2 sigma_x)
    assert m.sigma_p == pytest.approx(1.0 / 2.4, abs=1e-9)


def test_gaussian_rejects_bad_inputs(grid, params):
    with pytest.raises(BadSigma):
        make_gaussian(grid, 0.0, 0.0, -1.0, params)
    with pytest.raises(BadSigma):
        make_gaussian(grid, 0.0, 0.0, 0.1, params)  # under 2*dx
    with pytest.raises(GridOverflow):
        make_gaussian(grid, 19.0, 0.0, 1.0, params)  # 6 sigma leaves the grid
    with pytest.raises(GridOverflow):
        make_gaussian(grid, 0.0, 10.5, 1.0, params)  # above half the momentum limit


def test_momentum_roundtrip_is_identity(psi0, params):
    back = to_position(to_momentum(psi0))
    assert l2_distance(back, psi0) < 1e-13


def test_momentum_norm_matches_position_norm(psi0):
    phi = to_momentum(psi0)
    assert phi.norm == pytest.approx(psi0.norm, abs=1e-12)


def test_momentum_packet_centered_at_p0(grid, params):
    psi = make_gaussian(grid, 0.0, 2.0, 1.0, params)
    phi = to_momentum(psi)
    p = params.hbar * grid.k
    w = np.abs(phi.amp) ** 2
    mean_p = float(np.sum(p * w) / np.sum(w))
    assert mean_p == pytest.approx(2.0, abs=1e-9)


def test_overlap_requires_same_grid(psi0, params):
    other = Grid(-20.0, 20.0, 128)
    chi = make_gaussian(other, 0.0, 0.0, 1.0, params)
    with pytest.raises(GridMismatch):
        overlap(psi0, chi)


def test_overlap_of_displaced_gaussians(grid, params):
    # |<g(0)|g(d)>| = exp(-d^2/(8 sigma^2)); d=4, sigma=1 gives e^-2
    a = make_gaussian(grid, -2.0, 0.0, 1.0, params)
    b = make_gaussian(grid, 2.0, 0.0, 1.0, params)
    assert abs(overlap(a, b)) == pytest.approx(math.exp(-2.0), abs=1e-12)


def test_margin_helpers():
    assert margin_nodes(256) == 12
    assert margin_nodes(8) == 1
    amp = np.zeros(64, dtype=complex)
    amp[3] = 1e-9  # inside the 3-node guard band
    assert boundary_amplitude(amp, 64) == 0.0
    amp[1] = 1e-9
    assert boundary_amplitude(amp, 64) == pytest.approx(1e-9)


def test_check_margin_raises_with_context(grid):
    amp = np.zeros(grid.n, dtype=complex)
    amp[0] = 1.0
    with pytest.raises(GridOverflow, match="edge-test"):
        check_margin(WavePacket(grid, amp), "edge-test")


def test_trajectory_initial_value_form():
    # xddot = -g: falling from rest toward -x for g > 0
    tr = Trajectory.from_initial(1.0, 2.0, 0.0, g=3.0)
    assert tr.position(0.0) == 1.0
    assert tr.position(2.0) == pytest.approx(1.0 + 4.0 - 0.5 * 3.0 * 4.0)
    assert tr.velocity(2.0) == pytest.approx(2.0 - 6.0)


def test_trajectory_boundary_value_form_hits_endpoints_exactly():
    tr = Trajectory.through_points(0.3, 0.1, -2.7, 1.9, g=1.7)
    assert tr.position(0.1) == 0.3
    assert tr.position(1.9) == -2.7
    # interior point agrees with the initial-value parameterization
    v0 = tr.velocity(0.1)
    iv = Trajectory.from_initial(0.3, v0, 0.1, g=1.7)
    assert tr.position(1.0) == pytest.approx(iv.position(1.0), abs=1e-12)


def test_trajectory_velocity_is_position_derivative():
    tr = Trajectory.through_points(0.0, 0.0, 3.0, 2.0, g=1.0)
    h = 1e-6
    t = 0.7
    fd = (tr.position(t + h) - tr.position(t - h)) / (2 * h)
    assert tr.velocity(t) == pytest.approx(fd, abs=1e-8)


def test_moments_variance_never_negative(grid, params):
    # a one-node spike has zero spread; clamping must not produce NaN
    amp = np.zeros(grid.n, dtype=complex)
    amp[grid.n // 2] = 1.0
    m = moments(WavePacket(grid, amp), params)
    assert m.sigma_x == 0.0
    assert np.isfinite(m.sigma_p)
