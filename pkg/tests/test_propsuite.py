import pytest

from jumpjacobi.propsuite import (
    hermite_biehler,
    no_real_zeros,
    ode_residual,
    phase_monotone,
    run_suite,
    y_sign_structure,
)


@pytest.mark.parametrize("a", [0.25, -0.8])
def test_individual_checks_pass(a):
    for check in (no_real_zeros, hermite_biehler, phase_monotone, ode_residual, y_sign_structure):
        res = check(a)
        assert res.passed, res


def test_run_suite_shape():
    res = run_suite([0.5])
    assert [r.name for r in res] == [
        "no_real_zeros",
        "hermite_biehler",
        "phase_monotone",
        "ode_residual",
        "y_sign_structure",
    ]


def test_hermite_biehler_deterministic():
    assert hermite_biehler(0.3).value == hermite_biehler(0.3).value
