import math

import pytest

import dilute1d


def test_contact_scattering_length():
    r = dilute1d.scatter(dilute1d.Potential.lieb_liniger(2.0), radius=1.0, samples=5)
    assert r["scattering_length"] == pytest.approx(-1.0, rel=1e-12)
    assert len(r["samples"]) >= 5


def test_free_gas_has_no_scattering_length():
    assert dilute1d.scatter(dilute1d.Potential(), radius=1.0)["scattering_length"] is None


def test_config_round_trip():
    p = dilute1d.Potential.from_config("[potential.hardcore]\nx1 = 0.0\nx2 = 0.3\n")
    assert p.range == pytest.approx(0.3)
    assert dilute1d.Potential.from_config(p.config()).digest == p.digest


def test_lieb_liniger_sandwich():
    s = dilute1d.lieb_liniger(10.0, nodes=100)
    assert dilute1d.ll_lower_bound(10.0) <= s["e"] <= math.pi ** 2 / 3


def test_fermi_state():
    assert dilute1d.psi_F([0.2, 0.7], 1.0) > 0
    assert dilute1d.fermi_energy(2, 1.0) == pytest.approx(5 * math.pi ** 2)


def test_oracle_and_trial():
    e = dilute1d.oracle(1, 1.0, cells=64)
    assert e["extrapolated"] == pytest.approx(math.pi ** 2, rel=1e-6)
    t = dilute1d.trial(2, 1.0, dilute1d.Potential(), 0.3)
    assert t["energy"] == pytest.approx(5 * math.pi ** 2, rel=1e-10)


def test_validate_and_errors():
    r = dilute1d.validate(2, 40.0, symmetry="anyon", kappa=2 * math.pi / 3, c=1.0)
    assert r["scattering_length"] == pytest.approx(-1.0)
    with pytest.raises(ValueError):
        dilute1d.validate(2, 40.0, symmetry="anyon", kappa=4.0, c=1.0)
    with pytest.raises(OSError):
        dilute1d.Potential.load("/nonexistent/v.toml")
