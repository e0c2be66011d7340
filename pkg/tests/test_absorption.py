import math

import numpy as np
import pytest
from scipy.constants import c as SPEED_OF_LIGHT

from zenogate.absorption import (
    AbsorptionParams,
    device_length,
    factor_breakdown,
    load_params_file,
    resonant_cross_section,
    two_photon_rate,
    unity_mode_check,
)


def canonical_params(tau_r=16.7e-9, n_scale=1.0):
    """Parameters at the full cancellation point.

    core diameter lambda*sqrt(6)/pi makes sigma0/A exactly 1; M21/delta = 0.1
    with n_atoms = n_scale/f_delta cancels the detuning factor; packet length
    c*tau_c makes f_C * f_P exactly 1.
    """
    wavelength = 500e-9
    tau_c = tau_r / 10.0
    return AbsorptionParams(
        wavelength=wavelength,
        tau_r=tau_r,
        tau_c=tau_c,
        delta=1.0,
        m21=0.1,
        packet_length=SPEED_OF_LIGHT * tau_c,
        core_diameter=wavelength * math.sqrt(6.0) / math.pi,
        n_atoms=n_scale * 100.0,
        finesse=1.0,
    )


def test_cross_section_one_micron():
    assert resonant_cross_section(1e-6) == pytest.approx(4.77465e-13, rel=1e-5)


def test_cross_section_quadratic_scaling():
    assert resonant_cross_section(2e-6) == pytest.approx(4 * resonant_cross_section(1e-6), rel=1e-14)
    assert resonant_cross_section(1e-12) < 1e-21


def test_factor_breakdown_values():
    params = canonical_params()
    f_delta, f_c, f_p = factor_breakdown(params)
    assert f_delta == pytest.approx(0.01, rel=1e-14)
    assert f_c == pytest.approx(0.1, rel=1e-14)
    assert f_c * f_p == pytest.approx(1.0, rel=1e-14)


def test_factor_breakdown_collision_boundary():
    params = canonical_params()
    boundary = AbsorptionParams(
        wavelength=params.wavelength,
        tau_r=params.tau_r,
        tau_c=params.tau_r,
        delta=params.delta,
        m21=params.m21,
        packet_length=params.packet_length,
        core_diameter=params.core_diameter,
        n_atoms=params.n_atoms,
    )
    _, f_c, _ = factor_breakdown(boundary)
    assert f_c == 1.0


def test_factor_breakdown_rejects_resonance():
    from types import SimpleNamespace

    resonant = SimpleNamespace(
        m21=0.1, delta=0.0, tau_c=1e-10, tau_r=1e-9, packet_length=1.0
    )
    with pytest.raises(ValueError):
        factor_breakdown(resonant)
    with pytest.raises(ValueError):
        canonical_params_with_delta_zero()


def canonical_params_with_delta_zero():
    params = canonical_params()
    return AbsorptionParams(
        wavelength=params.wavelength,
        tau_r=params.tau_r,
        tau_c=params.tau_c,
        delta=0.0,
        m21=params.m21,
        packet_length=params.packet_length,
        core_diameter=params.core_diameter,
        n_atoms=params.n_atoms,
    )


def test_canonical_cancellation_rate():
    report = two_photon_rate(canonical_params())
    assert report.rate * 16.7e-9 == pytest.approx(math.sqrt(2 / math.pi), rel=1e-12)


def test_absorption_length_five_meters():
    # Scaling the atom count by sqrt(pi/2) sets R2 = 1/tau_r exactly, the
    # order-of-magnitude rate behind the ~5 m visible-band figure.
    tau_r = 16.7e-9
    report = two_photon_rate(canonical_params(tau_r=tau_r, n_scale=math.sqrt(math.pi / 2)))
    assert report.rate * tau_r == pytest.approx(1.0, rel=1e-12)
    assert report.absorption_length == pytest.approx(SPEED_OF_LIGHT * tau_r, rel=1e-12)
    assert abs(report.absorption_length - 5.0) < 0.05


def test_rate_linear_in_atom_count():
    r1 = two_photon_rate(canonical_params(n_scale=1.0)).rate
    r2 = two_photon_rate(canonical_params(n_scale=2.0)).rate
    assert r2 == pytest.approx(2 * r1, rel=1e-12)


def test_rate_monotonicity_in_collision_factor():
    params = canonical_params()
    slower_collisions = AbsorptionParams(
        wavelength=params.wavelength,
        tau_r=params.tau_r,
        tau_c=params.tau_c / 2,
        delta=params.delta,
        m21=params.m21,
        packet_length=params.packet_length,
        core_diameter=params.core_diameter,
        n_atoms=params.n_atoms,
    )
    assert two_photon_rate(slower_collisions).rate < two_photon_rate(params).rate


def test_rate_monotonicity_in_detuning():
    params = canonical_params()
    far = AbsorptionParams(
        wavelength=params.wavelength,
        tau_r=params.tau_r,
        tau_c=params.tau_c,
        delta=2.0,
        m21=params.m21,
        packet_length=params.packet_length,
        core_diameter=params.core_diameter,
        n_atoms=params.n_atoms,
    )
    assert two_photon_rate(far).rate < two_photon_rate(params).rate


def test_dimensional_consistency():
    report = two_photon_rate(canonical_params())
    assert report.absorption_length * report.rate == pytest.approx(SPEED_OF_LIGHT, rel=1e-12)


def test_unity_mode_check_near_standard_diameter():
    lam = 633e-9
    assert unity_mode_check(lam, 0.78 * lam) == pytest.approx(1.0, abs=0.01)


def test_unity_mode_check_scaling():
    lam = 633e-9
    base = unity_mode_check(lam, 0.78 * lam)
    assert unity_mode_check(lam, 2 * 0.78 * lam) == pytest.approx(base / 4, rel=1e-12)
    assert unity_mode_check(2 * lam, 0.78 * lam) == pytest.approx(4 * base, rel=1e-12)


def test_device_length_examples():
    length, loss = device_length(0.1, 5.0, 1.0)
    assert length == pytest.approx(50.0, rel=1e-12)
    assert loss == 1.0
    length, loss = device_length(1.0, 5.0, 100.0)
    assert length == pytest.approx(5e-4, rel=1e-12)
    assert length < 1e-3
    assert loss == pytest.approx(0.01, rel=1e-12)
    length, _ = device_length(1.0, 5.0, 1.0)
    assert length == 5.0


def test_device_length_finesse_scaling():
    l1, _ = device_length(0.5, 5.0, 10.0)
    l2, _ = device_length(0.5, 5.0, 20.0)
    assert l1 / l2 == pytest.approx(4.0, rel=1e-12)


def test_params_warn_outside_collision_regime():
    with pytest.warns(UserWarning):
        AbsorptionParams(
            wavelength=1e-6,
            tau_r=1e-9,
            tau_c=2e-9,
            delta=1.0,
            m21=0.1,
            packet_length=1.0,
            core_diameter=1e-6,
            n_atoms=10.0,
        )


def test_params_reject_nonpositive():
    with pytest.raises(ValueError):
        AbsorptionParams(
            wavelength=-1e-6,
            tau_r=1e-9,
            tau_c=1e-10,
            delta=1.0,
            m21=0.1,
            packet_length=1.0,
            core_diameter=1e-6,
            n_atoms=10.0,
        )


PARAMS_TEXT = """\
# canonical cancellation point, SI units
wavelength = 500e-9
tau_r = 16.7e-9
tau_c = 1.67e-9
delta = 1.0
m21 = 0.1
packet_length = {lp}
core_diameter = {d}
n_atoms = 100
finesse = 1.0
"""


def write_params(tmp_path, text):
    path = tmp_path / "params.txt"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_load_params_file_roundtrip(tmp_path):
    lp = SPEED_OF_LIGHT * 1.67e-9
    d = 500e-9 * math.sqrt(6.0) / math.pi
    path = write_params(tmp_path, PARAMS_TEXT.format(lp=lp, d=d))
    params, p_target = load_params_file(path)
    assert p_target == 1.0
    report = two_photon_rate(params, p_target)
    assert report.rate * params.tau_r == pytest.approx(math.sqrt(2 / math.pi), rel=1e-9)


def test_load_params_file_reports_line_numbers(tmp_path):
    path = write_params(tmp_path, "wavelength = 500e-9\ntau_r = 16.7e-9\nbogus line\n")
    with pytest.raises(ValueError, match="line 3"):
        load_params_file(path)
    path = write_params(tmp_path, "wavelength = 500e-9\nunknown_key = 2\n")
    with pytest.raises(ValueError, match="line 2"):
        load_params_file(path)
    path = write_params(tmp_path, "wavelength = oops\n")
    with pytest.raises(ValueError, match="line 1"):
        load_params_file(path)


def test_load_params_file_missing_keys(tmp_path):
    path = write_params(tmp_path, "wavelength = 500e-9\n")
    with pytest.raises(ValueError, match="missing required"):
        load_params_file(path)
