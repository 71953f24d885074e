import cmath
import math

import pytest

import quartic_moments as qm


def test_gaussian_parsing_and_arithmetic():
    z = qm.Gaussian("3+2i")
    assert (z.re, z.im) == (3, 2)
    assert z.norm() == 13
    assert z * z == qm.Gaussian(5, 12)
    assert str(qm.Gaussian(0, -1)) == "-i"
    with pytest.raises(ValueError):
        qm.Gaussian("3 + 2i")


def test_symbols():
    assert qm.quartic_symbol("i", "3+2i") == "-i"
    assert qm.quartic_symbol(2, "-1+2i") == "-i"
    assert qm.quartic_symbol(5, 1) == "1"
    assert qm.quartic_symbol("3+2i", "15+10i") == "0"
    assert qm.primary_associate("2-3i") == (3, qm.Gaussian(3, 2))


def test_gauss_sums():
    for n in ["3+2i", "-1+2i", "-3", "1+4i"]:
        g = qm.gauss_sum(1, n)
        assert abs(abs(g) ** 2 - qm.Gaussian(n).norm()) < 1e-9
        assert abs(g - qm.gauss_sum(1, n, method="direct")) < 1e-9
    assert abs(abs(qm.root_number(17)) - 17.0) < 1e-9


def test_l_values():
    principal = qm.L_half(1)["value"]
    assert abs(principal.real + 0.97506623) < 1e-7
    a = qm.L_half(17, x=10.0)["value"]
    b = qm.L_half(17)["value"]
    assert abs(a - b) < 2e-8
    assert abs(qm.L_half(17, conjugate=True)["value"] - b.conjugate()) < 2e-8
    assert abs(qm.incomplete_gamma_half(1.0) - math.erfc(1.0)) < 1e-15


def test_moment_and_constant():
    rep = qm.first_moment(100.0, x=20.0, threads=2)
    assert len(rep["rows"]) == 34
    assert abs(rep["total"].real + 0.393638147985078) < 1e-12
    assert rep["total"] == rep["sigma1"] + rep["sigma2"]
    assert abs(qm.constant_A()["A"] - 0.041232013) < 1e-8


def test_suites():
    assert "ray-class" in qm.suite_names()
    laws = qm.run_suite("ray-class")
    assert laws and all(law["ok"] for law in laws)
    with pytest.raises(ValueError):
        qm.run_suite("no-such-suite")
