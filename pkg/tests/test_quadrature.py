import math

import mpmath
import numpy as np
import pytest
from scipy.special import roots_jacobi

from jumpjacobi.errors import DomainError
from jumpjacobi.quadrature import (
    WeightSpec,
    composite_rule,
    gauss_jacobi,
    integrate_wc,
    jacobi_recurrence,
)


@pytest.mark.parametrize("alpha, beta", [(0.0, 0.0), (-0.5, -0.5), (0.7, -0.3), (2.5, 1.0)])
def test_gauss_jacobi_matches_scipy(alpha, beta):
    rule = gauss_jacobi(40, alpha, beta)
    x, w = roots_jacobi(40, alpha, beta)
    assert np.allclose(rule.nodes, x, atol=1e-14)
    # scipy's own weights carry ~1e-12 relative noise near the endpoints
    assert np.allclose(rule.weights, w, rtol=1e-11, atol=0)
    assert rule.exactness_degree == 79


def test_gauss_jacobi_exact_on_monomials():
    alpha, beta = 0.3, -0.6
    rule = gauss_jacobi(12, alpha, beta)
    for k in range(24):
        with mpmath.workdps(30):
            exact = float(mpmath.quad(lambda t: t**k * (1 - t) ** alpha * (1 + t) ** beta, [-1, 0, 1]))
        assert rule(lambda x: x**k) == pytest.approx(exact, rel=1e-12, abs=1e-14)


def test_gauss_jacobi_validation():
    with pytest.raises(DomainError):
        gauss_jacobi(0, 0.0, 0.0)
    with pytest.raises(DomainError):
        gauss_jacobi(5, -1.0, 0.0)


def test_gauss_jacobi_frozen_arrays():
    rule = gauss_jacobi(8, 0.0, 0.0)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


def test_jacobi_recurrence_legendre():
    b, a_sq, mu0 = jacobi_recurrence(6, 0.0, 0.0)
    assert mu0 == pytest.approx(2.0)
    assert np.allclose(b, 0.0)
    n = np.arange(1, 6)
    assert np.allclose(a_sq, n**2 / (4.0 * n**2 - 1))


def test_weight_spec_validation():
    with pytest.raises(DomainError):
        WeightSpec(alpha=-1.0)
    with pytest.raises(DomainError):
        WeightSpec(c=0.0)
    with pytest.raises(DomainError):
        WeightSpec(c=float("inf"))
    with pytest.raises(DomainError):
        WeightSpec(logh_cheb=(0.0, float("nan")))


def test_weight_spec_json_round_trip():
    spec = WeightSpec(0.5, -0.25, 3.0, (0.1, -0.2, 0.05))
    again = WeightSpec.from_json(spec.to_json())
    assert again == spec
    with pytest.raises(DomainError):
        WeightSpec.from_dict({"alpha": 0.0, "gamma": 1.0})


def test_weight_spec_wc_jump():
    spec = WeightSpec(0.0, 0.0, 2.0, (0.0, 1.0))
    assert spec.wc(0.3) == pytest.approx(4.0 * math.exp(0.3))
    assert spec.wc(-0.3) == pytest.approx(math.exp(-0.3))
    assert spec.h_is_trivial is False
    assert WeightSpec(0.2, 0.2, 3.0, (1.0, 0.0, 0.5)).is_symmetric


def test_composite_rule_mass():
    spec = WeightSpec(0.0, 0.0, 2.0)
    x, w = composite_rule(spec, 32)
    assert np.sum(w) == pytest.approx(1.0 + 4.0, rel=1e-15)
    assert np.all(np.diff(x) > 0)


def test_integrate_wc_closed_form():
    # int_{-1}^{1} e^x x w_c with alpha = beta = 0, c = 3
    spec = WeightSpec(0.0, 0.0, 3.0)
    val = integrate_wc(spec, lambda x: x * np.exp(x))
    left = 2 / math.e - 1  # int_{-1}^0 x e^x
    right = 1.0  # int_0^1 x e^x
    assert val == pytest.approx(left + 9 * right, rel=1e-13)


def test_integrate_wc_doubling_agreement():
    spec = WeightSpec(-0.4, 0.6, 0.3, (0.2, 0.5, -0.1))
    f = lambda x: np.cos(3 * x)
    a = integrate_wc(spec, f, npts=64)
    x, w = composite_rule(spec, 512)
    assert a == pytest.approx(np.dot(w, f(x)), rel=1e-12)
