import math

import numpy as np
import pytest

from energy_series import (EigenEstimate, error_model, eval_f, fitted_rates, radius_estimate,
                           truncated_root, truncated_roots)
from energy_series.errors import DegenerateSequence, InsufficientOrder, NoPositiveCoefficients

from conftest import EXACT_E0, EXACT_E1, QUARTIC_E0


def test_first_order_square_well(sq_series):
    e = truncated_root(sq_series, 1)
    assert isinstance(e, EigenEstimate)
    assert e.value == pytest.approx(3.0, abs=1e-12)
    assert e.method == "TruncatedRoot" and e.parity == "Even"


@pytest.mark.parametrize("label, n, ref", [("square-well", 6, 2.46773), ("power:2", 1, 1.27324),
                                           ("power:4", 3, 1.07240)])
def test_published_roots(hermitian_series, label, n, ref):
    assert truncated_root(hermitian_series[label], n).value == pytest.approx(ref, abs=1e-4)


def test_monotone_and_above_exact(hermitian_series):
    exact = dict(EXACT_E0, **{"power:4": QUARTIC_E0})
    for label, s in hermitian_series.items():
        E = truncated_roots(s)
        assert np.all(np.diff(E) < 0)
        assert np.all(E > exact[label])


def test_root_residual(hermitian_series):
    for s in hermitian_series.values():
        for n in range(1, s.order + 1):
            assert abs(eval_f(s, truncated_root(s, n).value, n) - 1.0) < 1e-12


def test_error_estimate_bounds_actual_error(harmonic_series):
    e = truncated_root(harmonic_series, 6)
    assert e.value - 1.0 < 3 * e.error_estimate


def test_negative_coefficients_rejected(sq_series):
    from dataclasses import replace
    bad = replace(sq_series, coefficients=(1 / 3, -0.1))
    with pytest.raises(NoPositiveCoefficients):
        truncated_root(bad, 2)


def test_order_checks(sq_series):
    with pytest.raises(InsufficientOrder):
        truncated_root(sq_series, 0)
    with pytest.raises(InsufficientOrder):
        truncated_root(sq_series, 99)


@pytest.mark.parametrize("label", ["square-well", "power:2", "power:1"])
def test_radius_estimate(hermitian_series, label):
    assert radius_estimate(hermitian_series[label]) == pytest.approx(EXACT_E1[label], rel=0.05)


def test_radius_geometric_exact():
    from types import SimpleNamespace
    R = 7.5
    fake = SimpleNamespace(order=6, a=R ** -np.arange(1.0, 7.0))
    assert radius_estimate(fake) == pytest.approx(R, rel=1e-14)


def test_radius_needs_three(sq_series):
    with pytest.raises(InsufficientOrder):
        radius_estimate(sq_series.truncated(2))


@pytest.mark.parametrize("label, r_expected", [("square-well", 0.25), ("power:2", 1 / 3), ("power:1", 1 / 2.29459)])
def test_error_model(hermitian_series, label, r_expected):
    s = hermitian_series[label].truncated(6)
    model = error_model(s)
    r, c = model
    assert r == pytest.approx(r_expected, rel=0.10)
    assert r == pytest.approx(model.predicted_r, rel=0.10)
    assert c > 0


def test_error_model_from_estimates(sq_series):
    s = sq_series.truncated(6)
    est = [truncated_root(s, n) for n in range(1, 7)]
    assert error_model(s, est).r == pytest.approx(error_model(s).r, rel=1e-14)


def test_fitted_rates_exact_on_geometric():
    n = np.arange(8)
    assert np.allclose(fitted_rates(2.0 + 0.7 * 0.3 ** n), 0.3, rtol=1e-10)


def test_fitted_rates_degenerate():
    with pytest.raises(DegenerateSequence):
        fitted_rates([1.0, 1.0, 1.0])
