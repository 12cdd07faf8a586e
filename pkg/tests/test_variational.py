import math

import numpy as np
import pytest

from energy_series import assemble, expectation, hamiltonian_residual, truncated_root
from energy_series.errors import InsufficientOrder
from energy_series.variational import overlap

from conftest import EXACT_E0, QUARTIC_E0


def test_order_zero_is_profile(harmonic_series):
    wf = assemble(harmonic_series, 0, 0.7)
    assert np.array_equal(wf.values, harmonic_series.profile.psi0)


def test_boundary_values(sq_series, harmonic_series):
    for s in (sq_series, harmonic_series):
        for n in range(1, 5):
            wf = assemble(s, n)
            assert wf.values[0] == 1.0
            assert abs(wf.derivative[0]) < 1e-12


def test_monotone_in_order(harmonic_series):
    E = truncated_root(harmonic_series, 4).value
    prev = assemble(harmonic_series, 3, E).values
    cur = assemble(harmonic_series, 4, E).values
    assert np.all(cur[1:] > prev[1:])


def test_square_well_shape(sq_series):
    wf = assemble(sq_series, 6)
    half = np.interp(0.5, wf.x, wf.values)
    assert half / wf.values[0] == pytest.approx(math.cos(math.pi / 4), abs=1e-3)


def test_residual_identity(sq_series, harmonic_series, linear_series):
    for s in (sq_series, harmonic_series, linear_series):
        for n in (1, 3, 6):
            assert hamiltonian_residual(s, n) < 1e-8


def test_residual_needs_order(sq_series):
    with pytest.raises(InsufficientOrder):
        hamiltonian_residual(sq_series, 0)
    with pytest.raises(InsufficientOrder):
        expectation(sq_series, 0)


def test_sandwich(hermitian_series):
    exact = dict(EXACT_E0, **{"power:4": QUARTIC_E0})
    for label, s in hermitian_series.items():
        top = 3 if s.order >= 3 else s.order
        for n in range(1, top + 1):
            E = truncated_root(s, n).value
            H = expectation(s, n).value
            assert E > H > exact[label]


@pytest.mark.parametrize("label", ["square-well", "power:2"])
def test_expectation_decreases(hermitian_series, label):
    H = [expectation(hermitian_series[label], n).value for n in (1, 2, 3, 4)]
    assert all(b < a for a, b in zip(H, H[1:]))


def test_moment_identity(harmonic_series):
    # int_0^inf psi0^2 phi_j phi_k = -psi0'(0) a_{j+k+1}
    s = harmonic_series
    prof = s.profile
    w = prof.grid.weights * prof.psi0 ** 2
    for j, k in ((0, 0), (1, 2), (3, 3)):
        m = w @ (s.phi[j] * s.phi[k]) + prof.tail_integral(s.phi[j][-1] * s.phi[k][-1])
        assert m == pytest.approx(-prof.slope_at_origin * s.a[j + k], rel=1e-9)


def test_normalization_grid_converged(harmonic_series):
    from energy_series import GridConfig, build_series, PotentialSpec
    fine = build_series(PotentialSpec.power(2), 4, GridConfig().refined(), error_estimates=False)
    a = overlap(assemble(harmonic_series, 3), assemble(harmonic_series, 3))
    b = overlap(assemble(fine, 3), assemble(fine, 3))
    assert abs(a / b - 1) < 1e-8


def test_expectation_error_estimate(harmonic_series):
    e = expectation(harmonic_series, 2)
    assert e.method == "Expectation" and e.error_estimate < 1e-9
