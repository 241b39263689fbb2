import json

import numpy as np
import pytest

import entloc


def test_sigma1_sigma2_residual_on_sep_I():
    a = entloc.construct_sep_I_preserver(entloc.pauli(1))
    b = entloc.construct_sep_I_preserver(entloc.pauli(2))
    assert abs(entloc.residual(a, b, entloc.sep_I_state(1, 0)) + 1) < 1e-12
    psi = entloc.sep_I_state(1 / np.sqrt(5), 2 / np.sqrt(5))
    assert abs(entloc.residual(a, b, psi) + 9 / 25) < 1e-12


def test_classify_verdicts():
    assert entloc.classify([1, 0, 0], "I")["verdict"] == "SepI"
    assert entloc.classify([0, 0, 1], "II")["verdict"] == "SepIIOnly"
    assert entloc.classify(np.eye(10)[0], "SSR")["separable"]


def test_purity_matches_discriminant():
    rng = np.random.default_rng(3)
    for _ in range(20):
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        v /= np.linalg.norm(v)
        d = entloc.sep_I_discriminant(v)
        assert abs(entloc.reduced_purity(v) - (1 - abs(d) ** 2 / 2)) < 1e-12


def test_preserver_fit_round_trip():
    o = np.array([[1, 2j], [0.5, -1]])
    fit = entloc.fit_sep_I_preserver(entloc.construct_sep_I_preserver(o))
    assert fit["fits"] and fit["defect"] < 1e-12
    assert entloc.is_sep_II_preserver(entloc.pauli(2))
    assert not entloc.is_sep_II_preserver(np.diag([1, 2]))


def test_witness_and_controls():
    a = entloc.construct_sep_I_preserver(entloc.pauli(3))
    w = entloc.find_witness(a, a, "I")
    assert w["found"] and abs(w["residual"] - 1) < 1e-6
    assert entloc.positive_control("mode", 10, 20) <= 1e-10
    assert entloc.audit(a, np.eye(3), "I", samples=50)["max_abs"] <= 1e-12


def test_errors():
    with pytest.raises(entloc.ZeroNormError):
        entloc.classify([0, 0, 0], "I")
    with pytest.raises(entloc.DimensionError):
        entloc.classify([1, 0], "I")
    with pytest.raises(ValueError):
        entloc.classify([1, 0, 0], "nope")


def test_cli_in_process():
    code, out, _ = entloc.run_cli(["reproduce-paper"])
    assert code == 0
    assert json.loads(out)["summary"]["status"] == "PASS"
    code, _, err = entloc.run_cli(["classify", "--amplitudes", "0,0,0"])
    assert code == 6 and "norm" in err
