"""
A non-Hermitian oscillator with a real spectrum: ``H = p^2 + i x^3``
====================================================================

On a rotated ray in the complex plane the problem maps onto the Hermitian
``|x|^3`` equation with complex energy, so the same real coefficients are
reused with phase weights.  The weighted series is not of one sign, so
truncated roots are no longer monotone, but they still approach the ground
energy found by shooting along the ray.
"""
from energy_series import PotentialSpec, build_series, pt_expectation, pt_root, pt_series
from energy_series.oracles import pt_ground_state

E0 = pt_ground_state(3).value
print(f"shooting ground energy E0 = {E0:.12f}")

pt = pt_series(build_series(PotentialSpec.power(3), 3), 3)
print("phase weights", pt.weights)
for n in (1, 2, 3):
    print(f"E_{n}/E0 = {pt_root(pt, n).value / E0:.5f}")
for n in (1, 2):
    print(f"<H>_{n}/E0 = {pt_expectation(pt, n).value / E0:.5f}")
