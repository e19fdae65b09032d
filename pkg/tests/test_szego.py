import cmath
import math

import numpy as np
import pytest

from jumpjacobi.errors import DomainError
from jumpjacobi.quadrature import WeightSpec
from jumpjacobi.szego import (
    boundary_limit,
    boundary_values,
    d_infinity,
    d_infinity_limit,
    hbar,
    phi,
    phi_cap,
    rho,
    szego_data,
    szego_full,
    szego_h,
    szego_jump,
)
from oracles import hbar_pv_oracle


def test_hbar_trivial_and_even():
    assert hbar(WeightSpec(), 0.3) == 0.0
    assert hbar(WeightSpec(logh_cheb=(0.4, 0.0, 0.3, 0.0, -0.1)), 0.0) == pytest.approx(0.0, abs=1e-16)


def test_hbar_exp_closed_form():
    spec = WeightSpec(logh_cheb=(0.0, 1.0))
    assert hbar(spec, 0.0) == pytest.approx(0.5, abs=1e-16)
    x = np.linspace(-0.9, 0.9, 7)
    assert np.allclose(hbar(spec, x), np.sqrt(1 - x**2) / 2, atol=1e-15)


@pytest.mark.parametrize("coefs", [(0.0, 1.0), (0.2, 0.5, -0.3, 0.1)])
@pytest.mark.parametrize("x", [-0.7, -0.1, 0.0, 0.45, 0.85])
def test_hbar_matches_pv_oracle(coefs, x):
    spec = WeightSpec(logh_cheb=coefs)
    assert hbar(spec, x) == pytest.approx(hbar_pv_oracle(spec, x), abs=1e-8)


def test_hbar_domain():
    with pytest.raises(DomainError):
        hbar(WeightSpec(), 1.0)


def test_phi_values():
    assert complex(phi(2.0)).real == pytest.approx(2 + math.sqrt(3))
    z = np.array([0.3 + 0.1j, -2.0, 5j])
    assert np.all(np.abs(phi(z)) > 1)


def test_szego_h_values():
    assert szego_h(WeightSpec(), 2 + 1j) == pytest.approx(1.0)
    assert szego_h(WeightSpec(logh_cheb=(0.0, 1.0)), 1e8) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(DomainError):
        szego_h(WeightSpec(), 0.5)


def test_szego_jump_values():
    assert szego_jump(1.0, 0.2 + 0.3j) == 1.0
    assert szego_jump(4.0, 1e6) == pytest.approx(2.0, abs=1e-4)
    # local law at the jump
    c = 3.0
    z = 1e-4 * cmath.exp(0.25j * math.pi)
    ratio = szego_jump(c, z) * c ** (-1 - 1j / math.pi * cmath.log(z / 2))
    assert abs(ratio - 1) < 1e-3


def test_chebyshev_szego():
    spec = WeightSpec(-0.5, -0.5, 1.0)
    z = 2.0
    ref = math.sqrt(2 + math.sqrt(3)) / 3 ** 0.25
    assert abs(szego_full(spec, z)) == pytest.approx(ref, rel=1e-14)


@pytest.mark.parametrize("x, expected", [(-0.5, 1.0), (0.5, 4.0)])
def test_product_law_examples(x, expected):
    dp, dm = boundary_values(WeightSpec(0.0, 0.0, 2.0), x)
    assert abs(dp * dm - expected) < 1e-8


def test_boundary_values_match_limits():
    spec = WeightSpec(0.3, -0.4, 2.5, (0.1, 0.2, -0.3))
    f = lambda z: szego_full(spec, z)
    for x in (-0.6, -0.2, 0.3, 0.7):
        dp, dm = boundary_values(spec, x)
        assert abs(boundary_limit(f, x, side=1) - dp) < 1e-6 * abs(dp)
        assert abs(boundary_limit(f, x, side=-1) - dm) < 1e-6 * abs(dm)
    with pytest.raises(DomainError):
        boundary_values(spec, 0.0)


def test_boundary_modulus_h():
    spec = WeightSpec(logh_cheb=(0.3, -0.5, 0.2))
    x = 0.35
    val = boundary_limit(lambda z: szego_h(spec, z), x)
    assert abs(val) == pytest.approx(math.sqrt(float(spec.h(x))), rel=1e-7)
    assert cmath.phase(val) == pytest.approx(-hbar(spec, x), abs=1e-7)


def test_d_infinity_two_paths():
    for spec in (WeightSpec(0.0, 0.0, 2.0), WeightSpec(0.5, -0.3, 0.5, (0.1, 0.3, -0.2)), WeightSpec(-0.5, -0.5, 3.0, (0.0, 1.0))):
        assert abs(d_infinity_limit(spec) - d_infinity(spec)) < 1e-10


def test_phi_cap_examples():
    assert phi_cap(WeightSpec(), 0.4) == 0.0
    assert phi_cap(WeightSpec(1.0, 0.0), 0.0) == pytest.approx(math.pi / 4)
    assert phi_cap(WeightSpec(0.5, 0.0), 1 - 1e-14) == pytest.approx(math.pi / 4, abs=1e-6)


def test_rho_examples():
    assert rho(WeightSpec(), 0.7) == 0.0
    spec = WeightSpec(c=math.exp(math.pi))
    expected = math.log(math.asin(0.5) * (1 + math.sqrt(0.75)))
    assert rho(spec, 0.5) == pytest.approx(expected, abs=1e-14)
    assert rho(spec, 0.5) == pytest.approx(-0.0232, abs=5e-5)
    assert abs(rho(spec, 0.5 + 1e-6) - rho(spec, 0.5 - 1e-6)) < 1e-6
    assert rho(spec, 0.0) == 0.0
    assert abs(rho(spec, 1e-9)) < 1e-12


def test_szego_data():
    spec = WeightSpec(logh_cheb=(0.0, 1.0))
    data = szego_data(spec)
    assert data.hbar0 == pytest.approx(0.5)
    assert data.d_infinity == pytest.approx(1.0)
