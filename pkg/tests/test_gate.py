import math

import numpy as np
import pytest

from zenogate.dynamics import StateVector
from zenogate.fock import FockState, enumerate_basis
from zenogate.gate import (
    COMPUTATIONAL_OCCUPATIONS,
    GateReport,
    ZenoProtocol,
    apply_output_phase,
    closed_form_error,
    cnot_matrix,
    compose_controlled_z,
    controlled_z_matrix,
    error_curve,
    extract_gate,
    hadamard_on_target,
    hom_curve,
    phased_sqrt_swap_matrix,
    phased_swap_matrix,
    rabi_curve,
    run_absorption_protocol,
    run_discrete_protocol,
    swap_matrix,
)

BASIS = enumerate_basis(2, 2)


# ---------------------------------------------------------------------------
# closed-form failure probability
# ---------------------------------------------------------------------------


def test_closed_form_single_measurement_always_fails():
    assert closed_form_error(1) == pytest.approx(1.0, abs=1e-15)


def test_closed_form_two_measurements():
    # Brute force: two survival factors of cos^2(pi/4) each.
    assert closed_form_error(2) == pytest.approx(0.75, abs=1e-15)
    sim = run_discrete_protocol(2, FockState((1, 1)))
    assert 1 - sim.success_probability == pytest.approx(0.75, abs=1e-12)


def test_closed_form_large_n_scaling():
    for n in (500, 1000, 5000):
        assert n * closed_form_error(n) == pytest.approx(np.pi**2 / 4, rel=3e-3)


def test_scaled_error_converges_monotonically():
    values = [n * closed_form_error(n) for n in (1, 2, 5, 10, 50, 100, 200, 1000)]
    assert all(a < b for a, b in zip(values, values[1:]))
    for n in (100, 200, 1000):
        assert abs(n * closed_form_error(n) - np.pi**2 / 4) < 0.02 * np.pi**2 / 4


# ---------------------------------------------------------------------------
# discrete protocol
# ---------------------------------------------------------------------------


def test_discrete_single_measurement_destroys_two_photon_input():
    result = run_discrete_protocol(1, FockState((1, 1)))
    assert result.success_probability == 0.0
    assert result.final_state is None


def test_discrete_single_photon_passes_untouched():
    for n in (1, 3, 17):
        result = run_discrete_protocol(n, FockState((1, 0)))
        assert all(p == 1.0 for p in result.step_successes)
        amps = result.final_state.amplitudes
        assert amps[BASIS.index_of((1, 0))] == pytest.approx(1 / np.sqrt(2), abs=1e-12)
        assert amps[BASIS.index_of((0, 1))] == pytest.approx(-1j / np.sqrt(2), abs=1e-12)


def test_discrete_success_matches_closed_form_over_full_range():
    for n in range(1, 201):
        sim = 1 - run_discrete_protocol(n, FockState((1, 1))).success_probability
        assert abs(sim - closed_form_error(n)) < 1e-10


def test_discrete_rejects_non_computational_input():
    with pytest.raises(ValueError):
        run_discrete_protocol(5, FockState((2, 0)))


# ---------------------------------------------------------------------------
# absorption protocol
# ---------------------------------------------------------------------------


def test_absorption_single_photon_never_decays():
    for tau_d in (0.01, 1.0):
        _, survival = run_absorption_protocol(tau_d, FockState((1, 0)))
        assert survival == pytest.approx(1.0, abs=1e-12)


def test_absorption_weak_limit_reproduces_hom_loss():
    rho, survival = run_absorption_protocol(np.inf, FockState((1, 1)))
    assert survival == pytest.approx(1.0, abs=1e-10)
    assert rho.population((1, 1)) < 1e-12  # the coincidence dip at t = pi/4


def test_absorption_error_tracks_discrete_closed_form():
    n = 50
    tau_d = (np.pi / 4) / (4 * n)
    _, survival = run_absorption_protocol(tau_d, FockState((1, 1)))
    assert 1 - survival == pytest.approx(closed_form_error(n), rel=0.10)


@pytest.mark.parametrize("n,rel", [(10, 0.10), (20, 0.10), (50, 0.03), (100, 0.03)])
def test_matched_absorption_error_within_bounds(n, rel):
    (_, p_abs), = error_curve("absorption", [n])
    assert p_abs == pytest.approx(closed_form_error(n), rel=rel)


def test_error_curve_discrete_values():
    rows = error_curve("discrete", [1, 2, 20])
    assert rows[0] == (1.0, pytest.approx(1.0, abs=1e-12))
    assert rows[1][1] == pytest.approx(0.75, abs=1e-12)
    assert rows[2][1] == pytest.approx(closed_form_error(20), abs=1e-12)


def test_error_curve_rejects_empty_grid():
    with pytest.raises(ValueError):
        error_curve("discrete", [])
    with pytest.raises(ValueError):
        error_curve("nope", [1])


# ---------------------------------------------------------------------------
# output phases and gate extraction
# ---------------------------------------------------------------------------


def test_output_phase_examples():
    vac = apply_output_phase(StateVector.basis_state(BASIS, (0, 0)))
    assert vac.amplitudes[BASIS.index_of((0, 0))] == 1.0
    one = apply_output_phase(StateVector.basis_state(BASIS, (1, 0)))
    assert one.amplitudes[BASIS.index_of((1, 0))] == pytest.approx(np.exp(1j * np.pi / 4), abs=1e-15)
    two = apply_output_phase(StateVector.basis_state(BASIS, (1, 1)))
    assert two.amplitudes[BASIS.index_of((1, 1))] == pytest.approx(1j, abs=1e-15)


def test_extract_gate_converges_to_target():
    report = extract_gate(ZenoProtocol.discrete(1000))
    assert np.max(np.abs(report.conditional_map - phased_sqrt_swap_matrix())) < 5e-3
    assert report.fidelity_to_target > 0.999
    assert report.error_probability == pytest.approx(closed_form_error(1000), abs=1e-10)


def test_extract_gate_single_measurement_leaks_everything():
    report = extract_gate(ZenoProtocol.discrete(1))
    assert report.conditional_map[3, 3] == 0.0
    assert report.error_probability == pytest.approx(1.0, abs=1e-12)
    assert report.leakage == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 20, 100])
def test_single_photon_block_is_exact_at_any_n(n):
    report = extract_gate(ZenoProtocol.discrete(n))
    target = phased_sqrt_swap_matrix()
    assert np.max(np.abs(report.conditional_map[1:3, 1:3] - target[1:3, 1:3])) < 1e-12
    assert report.conditional_map[0, 0] == pytest.approx(1.0, abs=1e-12)
    for p in report.success_probability_per_input[:3]:
        assert p == pytest.approx(1.0, abs=1e-9)


def test_fidelity_monotone_in_n():
    fidelities = [
        extract_gate(ZenoProtocol.discrete(n)).fidelity_to_target
        for n in (1, 2, 5, 10, 50, 100, 1000)
    ]
    assert all(b >= a - 1e-12 for a, b in zip(fidelities, fidelities[1:]))


def test_extract_gate_absorption_route():
    n = 1000
    tau_d = (np.pi / 4) / (4 * n)
    report = extract_gate(ZenoProtocol.absorption(tau_d))
    assert np.max(np.abs(report.conditional_map - phased_sqrt_swap_matrix())) < 5e-3
    assert report.fidelity_to_target > 0.999
    # leakage = absorbed + residual double occupancy; the residual on top of
    # the absorbed error is O((4 tau_d)^2)
    assert report.leakage < 5e-3
    assert 0.0 <= report.leakage - report.error_probability < 1e-5


def test_protocol_validation():
    with pytest.raises(ValueError):
        ZenoProtocol.discrete(0)
    with pytest.raises(ValueError):
        ZenoProtocol.absorption(0.0)
    with pytest.raises(ValueError):
        ZenoProtocol(kind="other")


# ---------------------------------------------------------------------------
# controlled-Z composition
# ---------------------------------------------------------------------------


def test_squared_gate_matches_phased_swap():
    m = phased_sqrt_swap_matrix()
    assert np.max(np.abs(m @ m - phased_swap_matrix())) < 1e-12


def test_compose_controlled_z_is_exact():
    assert np.array_equal(compose_controlled_z(), controlled_z_matrix())


def test_controlled_z_with_hadamards_gives_cnot():
    h = hadamard_on_target()
    assert np.max(np.abs(h @ compose_controlled_z() @ h - cnot_matrix())) < 1e-12


def test_swap_composition_sanity():
    assert np.array_equal(swap_matrix() @ swap_matrix(), np.eye(4, dtype=complex))


# ---------------------------------------------------------------------------
# reference curves
# ---------------------------------------------------------------------------


def test_rabi_curve_is_cos_squared():
    ts = np.linspace(0, 2 * np.pi, 257)
    rows = rabi_curve(ts)
    err = max(abs(p - np.cos(t) ** 2) for t, p in rows)
    assert err < 1e-9


def test_hom_curve_is_cos_squared_double_angle():
    ts = np.linspace(0, np.pi / 4, 101)
    rows = hom_curve(ts)
    err = max(abs(p - np.cos(2 * t) ** 2) for t, p in rows)
    assert err < 1e-9
    assert rows[0][1] == pytest.approx(1.0, abs=1e-12)
    assert rows[-1][1] < 1e-12
    mid = hom_curve([np.pi / 8])[0][1]
    assert mid == pytest.approx(0.5, abs=1e-9)


def test_computational_occupation_order_is_fixed():
    assert COMPUTATIONAL_OCCUPATIONS == ((0, 0), (0, 1), (1, 0), (1, 1))
