"""
Ground state of the infinite square well from a power series in E
=================================================================

The well ``|x| < 1`` has ``psi0 = 1 - x`` at zero energy and a quantization
function whose Taylor coefficients are rationals.  We rebuild them
numerically, solve the truncated conditions and watch the error shrink by
about a factor of four per order.
"""
from fractions import Fraction
import math

import numpy as np

from energy_series import PotentialSpec, build_series, error_model, shanks, truncated_roots

spec = PotentialSpec.square_well()
series = build_series(spec, 7)

# Coefficients against their exact rational values.
exact = [Fraction(1, 3), Fraction(1, 45), Fraction(2, 945), Fraction(1, 4725),
         Fraction(2, 93555), Fraction(1382, 638512875), Fraction(4, 18243225)]
for k, (a, q) in enumerate(zip(series.a, exact), start=1):
    print(f"a_{k} = {a:.15e}   exact {str(q):>18}   |d| = {abs(a - float(q)):.1e}")

# Truncated roots E_n approach pi^2/4 from above.
E0 = math.pi ** 2 / 4
E = truncated_roots(series, 6)
print("\n n   E_n        E_n/E0")
for n, v in enumerate(E, start=1):
    print(f"{n:2d}  {v:.5f}   {v / E0:.5f}")

# The geometric rate is E0 over the radius of convergence, pi^2, so 1/4.
model = error_model(series)
print(f"\nfitted rate {model.r:.4f}, predicted {model.predicted_r:.4f}")

# Shanks removes the leading geometric error.
print("Shanks of E_n/E0:", np.round(shanks(E / E0).compressed(), 5))
