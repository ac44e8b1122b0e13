"""Two-branch protocol: fringe phase, visibility, unwrapping, schedules."""

import math

import numpy as np
import pytest

from wavefall import (
    AccelSchedule,
    BranchSchedules,
    Colocated,
    NegativeTime,
    PhaseAliasing,
    SchemeMismatch,
    WavePacket,
    branch_states,
    fringe_scan,
    gaussian_visibility,
    make_gaussian,
    moments,
    overlap,
    predicted_phase,
    run_protocol,
    unwrap_phases,
)

# phase(t2) - phase(1) is exactly pi for the canonical fall, the one step
# size the unwrapper must refuse
ALIASING_T2 = (1.0 + 3.0 * math.pi) ** (1.0 / 3.0)


def test_canonical_fringe_at_unit_time(psi0, params):
    rec = run_protocol(psi0, params, 1.0)
    assert rec.phase == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert rec.visibility == pytest.approx(math.exp(-0.625), abs=1e-9)
    assert rec.predicted_phase == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert rec.predicted_visibility == pytest.approx(math.exp(-0.625), abs=1e-9)
    assert rec.fringe_x == rec.overlap.real
    assert rec.fringe_y == rec.overlap.imag


def test_overlap_matches_characteristic_function(psi0, params):
    # for the colocated scheme the overlap is the reference density's
    # characteristic function at the momentum kick, times the cubic phase
    t = 0.8
    rec = run_protocol(psi0, params, t)
    _, ref = branch_states(psi0, params, t)
    g = psi0.grid
    kick = params.m * params.g * t / params.hbar
    char = np.sum(np.abs(ref.amp) ** 2 * np.exp(-1j * kick * g.x)) * g.dx
    oracle = np.exp(-1j * params.m * params.g**2 * t**3 / (6 * params.hbar)) * char
    assert abs(rec.overlap - oracle) < 1e-13


def test_prediction_tracks_measurement_across_times(psi0, params):
    for t in (0.25, 0.75, 1.25):
        rec = run_protocol(psi0, params, t)
        assert rec.phase == pytest.approx(rec.predicted_phase, abs=1e-9)
        assert rec.visibility == pytest.approx(rec.predicted_visibility, abs=1e-9)


def test_split_step_backend_agrees(psi0, params):
    a = run_protocol(psi0, params, 1.0, backend="analytic")
    s = run_protocol(psi0, params, 1.0, backend="split-step", n_steps=2048)
    assert s.phase == pytest.approx(a.phase, abs=1e-5)
    assert s.visibility == pytest.approx(a.visibility, abs=1e-6)


def test_moving_packet_changes_phase_not_visibility(grid, params):
    # launching the packet shifts the readout center, moving the fringe
    # phase through the m g xbar t term; contrast depends only on sigma_t
    psi = make_gaussian(grid, 0.0, 1.0, 1.0, params)
    rec = run_protocol(psi, params, 1.0)
    _, ref = branch_states(psi, params, 1.0)
    xbar = moments(ref, params).mean_x
    assert xbar == pytest.approx(0.5, abs=1e-9)  # drifted then recentered
    assert rec.phase == pytest.approx(predicted_phase(xbar, 1.0, params), abs=1e-9)
    assert rec.visibility == pytest.approx(math.exp(-0.625), abs=1e-9)


def test_non_gaussian_input_gives_no_visibility_prediction(grid, params):
    a = make_gaussian(grid, -2.0, 0.0, 1.0, params)
    b = make_gaussian(grid, 2.0, 0.0, 1.0, params)
    cat = WavePacket(grid, (a.amp + b.amp) / math.sqrt(2.0))
    rec = run_protocol(cat, params, 0.5)
    assert rec.predicted_visibility is None
    assert rec.predicted_phase == pytest.approx(rec.phase, abs=1e-6)


def test_gaussian_visibility_closed_form(params):
    sigma_t = math.sqrt(5.0) / 2.0
    assert gaussian_visibility(sigma_t, 1.0, params) == pytest.approx(
        math.exp(-0.625), abs=1e-15
    )
    free = type(params)(hbar=1.0, m=1.0, g=0.0, c=10.0)
    assert gaussian_visibility(2.0, 1.0, free) == 1.0


def test_negative_time_rejected(psi0, params):
    with pytest.raises(NegativeTime):
        run_protocol(psi0, params, -0.5)


def test_equal_schedules_interfere_perfectly(psi0, params):
    sched = AccelSchedule(((1.0, 0.5), (0.0, 0.5)))
    rec = run_protocol(
        psi0, params, 1.0, scheme=BranchSchedules(accelerated=sched, reference=sched)
    )
    assert rec.visibility == pytest.approx(1.0, abs=1e-12)
    assert rec.phase == pytest.approx(0.0, abs=1e-12)


def test_swapped_schedules_conjugate_the_overlap(psi0, params):
    a = AccelSchedule(((1.0, 0.6), (0.0, 0.4)))
    b = AccelSchedule(((0.0, 0.6), (1.0, 0.4)))
    fwd = run_protocol(psi0, params, 1.0, scheme=BranchSchedules(a, b))
    rev = run_protocol(psi0, params, 1.0, scheme=BranchSchedules(b, a))
    assert abs(fwd.overlap - np.conj(rev.overlap)) < 1e-12


def test_schedule_totals_must_agree(psi0, params):
    a = AccelSchedule(((1.0, 0.5),))
    b = AccelSchedule(((1.0, 0.75),))
    with pytest.raises(SchemeMismatch):
        run_protocol(psi0, params, 0.5, scheme=BranchSchedules(a, b))


def test_schedule_total_must_match_requested_time(psi0, params):
    sched = AccelSchedule(((1.0, 0.5),))
    with pytest.raises(SchemeMismatch):
        run_protocol(psi0, params, 1.0, scheme=BranchSchedules(sched, sched))


def test_split_step_backend_on_schedules(psi0, params):
    a = AccelSchedule(((1.0, 0.6), (0.0, 0.4)))
    b = AccelSchedule(((0.0, 0.6), (1.0, 0.4)))
    fwd = run_protocol(psi0, params, 1.0, scheme=BranchSchedules(a, b))
    num = run_protocol(
        psi0, params, 1.0, scheme=BranchSchedules(a, b),
        backend="split-step", n_steps=1024,
    )
    assert num.phase == pytest.approx(fwd.phase, abs=1e-5)
    assert num.visibility == pytest.approx(fwd.visibility, abs=1e-6)


def test_unwrap_accumulates_a_growing_phase():
    true = np.array([0.0, 1.5, 3.0, 4.5, 6.0, 7.5])
    wrapped = np.angle(np.exp(1j * true))
    out = unwrap_phases(wrapped)
    np.testing.assert_allclose(out, true, atol=1e-12)


def test_unwrap_handles_decreasing_phase():
    true = -np.array([0.2, 1.7, 3.2, 4.7])
    out = unwrap_phases(np.angle(np.exp(1j * true)))
    np.testing.assert_allclose(out, true, atol=1e-12)


def test_unwrap_refuses_half_turn_steps():
    with pytest.raises(PhaseAliasing):
        unwrap_phases([0.0, math.pi])


def test_fringe_scan_unwraps_the_cubic_phase(psi0, params):
    times = [0.6, 1.0, 1.4, 1.8, 2.2]
    records = fringe_scan(psi0, params, times)
    for rec in records:
        assert rec.phase_unwrapped == pytest.approx(rec.t**3 / 3.0, abs=1e-8)
    # t = 2.2 sits past the first wrap (t^3/3 > pi), so the principal value
    # and the continued branch must part ways there
    assert abs(records[-1].phase - records[-1].phase_unwrapped) == pytest.approx(
        2.0 * math.pi, abs=1e-8
    )


def test_fringe_scan_raises_on_engineered_aliasing(psi0, params):
    with pytest.raises(PhaseAliasing, match="densify"):
        fringe_scan(psi0, params, [1.0, ALIASING_T2])


def test_fringe_scan_validates_times(psi0, params):
    with pytest.raises(ValueError):
        fringe_scan(psi0, params, [1.0, 0.5])
    assert fringe_scan(psi0, params, []) == []


def test_fringe_scan_accepts_time_dependent_schemes(psi0, params):
    # per-time schedules: single segment matching each readout time
    def scheme(t):
        sched = AccelSchedule(((params.g, t),))
        free = AccelSchedule(((0.0, t),))
        return BranchSchedules(accelerated=sched, reference=free)

    records = fringe_scan(psi0, params, [0.2, 0.4], scheme=scheme)
    assert len(records) == 2
    # each record must match a directly built schedule for its own time
    for rec in records:
        direct = run_protocol(psi0, params, rec.t, scheme=scheme(rec.t))
        assert rec.overlap == pytest.approx(direct.overlap, abs=1e-12)
