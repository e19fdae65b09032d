import math

import mpmath
import numpy as np
import pytest

from jumpjacobi.errors import DomainError
from jumpjacobi.specfun import (
    SERIES_CAP,
    arg_f1,
    arg_gamma,
    frak_g,
    g_func,
    g_prime,
    gamma,
    invert_frak_g,
    jump_lambda,
    kummer_m,
    log_c_over_c2m1,
    log_gamma,
    tau_lambda,
    upsilon,
)

# frozen from mpmath at 40 digits
LOG_GAMMA_CASES = [
    (0.5, 0.5723649429247000870717),
    (0.3 + 2.5j, -3.190158206428398813 - 0.5147052958740417364j),
    (0.2206356001526516j, 1.471827382366122765 - 1.693951962931560243j),
]

KUMMER_CASES = [
    (0.25j, 10j, 1, 0.52809231610194110280 - 0.48398924890665245209j, 1e-11),
    (1j, -20j, 1, -8.9057371028834711114 + 0.52472426016509342014j, 1e-11),
    # |a| = 3 at |z| = 50 sits past the 1e-11 regime of the error model
    (3j, 50j, 1, -0.037910021343286816488 + 0.21702746994148315216j, 1e-9),
    (1 + 0.5j, 30j, 1, 0.47121454068917548042 + 0.27396241215815999542j, 1e-11),
    (0.3 + 0.2j, 1 + 2j, 1, 0.28353686621743694198 + 0.52641991618228806941j, 1e-11),
    (1 + 1.2j, -45j, 1, -12.693478255627091955 - 9.9169587868109441076j, 1e-11),
    (1.2 + 0.4j, 7j, 2, 0.15708494393535520494 + 0.083033086597418254031j, 1e-11),
]

# continuous branch of arg 1F1(ia; 1; ix), mpmath with fine unwrapping
ARG_CASES = [
    (1.0, 5.0, -2.01852245796396983676),
    (0.25, -10.0, -0.68683803730777784204),
    (-0.5, 7.5, 1.29010745670149300509),
    (2.0, 20.0, -5.99774655291592801543),
]


@pytest.mark.parametrize("z, expected", LOG_GAMMA_CASES)
def test_log_gamma_frozen(z, expected):
    assert abs(log_gamma(z) - expected) < 1e-13


def test_log_gamma_reflection_half_plane():
    z = -2.5 + 0.7j
    ref = complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))
    assert abs(gamma(z) / ref - 1) < 1e-13


def test_log_gamma_pole():
    with pytest.raises(DomainError):
        log_gamma(-3.0)


def test_gamma_integers():
    for k in range(1, 12):
        assert gamma(k).real == pytest.approx(math.factorial(k - 1), rel=1e-13)


def test_arg_gamma_principal():
    lam = jump_lambda(2.0)
    assert arg_gamma(lam) == pytest.approx(-1.693951962931560243, abs=1e-13)
    for c in (0.01, 0.2, 5.0, 1e3):
        assert -math.pi < arg_gamma(jump_lambda(c)) <= math.pi


def test_jump_lambda():
    assert jump_lambda(math.e**math.pi) == pytest.approx(1j)
    assert jump_lambda(1.0) == 0
    with pytest.raises(DomainError):
        jump_lambda(0.0)


def test_tau_lambda_unimodular():
    for c in (0.3, 2.0, 7.0):
        assert abs(tau_lambda(c)) == pytest.approx(1.0, abs=1e-14)
    assert tau_lambda(1.0) == -1


@pytest.mark.parametrize("a, z, b, expected, tol", KUMMER_CASES)
def test_kummer_frozen(a, z, b, expected, tol):
    assert abs(kummer_m(a, z, b=b) / expected - 1) < tol


def test_kummer_vectorized_matches_scalar():
    zs = 1j * np.linspace(-30, 30, 13)
    vec = kummer_m(0.7j, zs)
    assert vec.shape == zs.shape
    for z, v in zip(zs, vec):
        assert v == kummer_m(0.7j, z)


def test_kummer_cap_and_b():
    with pytest.raises(DomainError):
        kummer_m(1j, 1j * (SERIES_CAP + 1))
    with pytest.raises(DomainError):
        kummer_m(1j, 1.0, b=3)
    with pytest.raises(DomainError):
        kummer_m(1j, complex("nan"))


def test_g_conjugation_identity():
    # Kummer's transformation: conj G(ia; ix) = G(1 + ia; ix) for real a, x
    x = np.linspace(-20, 20, 9)
    a = 0.4j
    assert np.allclose(np.conj(g_func(a, 1j * x)), g_func(1 + a, 1j * x), rtol=1e-12, atol=1e-14)


def test_g_prime_finite_difference():
    a = 0.3 + 0.1j
    z = 2.0 + 3.0j
    h = 1e-5
    fd = (g_func(a, z + h) - g_func(a, z - h)) / (2 * h)
    assert abs(g_prime(a, z) - fd) < 1e-8


@pytest.mark.parametrize("a, x, expected", ARG_CASES)
def test_arg_f1_frozen(a, x, expected):
    assert arg_f1(a, x) == pytest.approx(expected, abs=1e-11)


def test_arg_f1_zero_a_and_origin():
    assert arg_f1(0.0, 3.0) == 0.0
    assert arg_f1(1.3, 0.0) == 0.0
    assert np.all(arg_f1(0.0, np.array([1.0, 2.0])) == 0.0)


def test_frak_g_and_inverse():
    a = math.log(2.0) / math.pi
    x = invert_frak_g(a, 2 * math.pi)
    # endpoint t = x / (2 pi) from an mpmath root
    assert x / (2 * math.pi) == pytest.approx(0.8393855324409093170, abs=1e-10)
    assert frak_g(a, x) == pytest.approx(2 * math.pi, abs=1e-10)
    assert invert_frak_g(a, 0.0) == 0.0
    assert invert_frak_g(0.0, 3.0) == 3.0


def test_invert_frak_g_negative_target():
    a = -0.4
    x = invert_frak_g(a, -9.0)
    assert frak_g(a, x) == pytest.approx(-9.0, abs=1e-10)


def test_upsilon_values():
    assert upsilon(1.0) == 1.0
    c = 2.0
    assert upsilon(c) == pytest.approx(math.sqrt(2 * c * math.log(c) / (c * c - 1)), rel=1e-15)
    assert upsilon(0.5) == pytest.approx(-upsilon(2.0), rel=1e-15)
    # continuous through c = 1
    assert upsilon(1 + 1e-9) == pytest.approx(1.0, abs=1e-8)


def test_log_c_over_c2m1():
    assert log_c_over_c2m1(1.0) == 0.5
    assert log_c_over_c2m1(2.0) == pytest.approx(math.log(2) / 3, rel=1e-15)
    assert log_c_over_c2m1(1 + 1e-10) == pytest.approx(0.5, abs=1e-9)
