"""
Excited levels from diagonal Pade approximants
==============================================

The series of ``f(E)`` converges only up to the first odd level, where
``f`` has a pole.  Diagonal Pade approximants continue it past that point:
their zeros of ``f - 1`` are even levels and their poles are odd levels.
"""
import numpy as np

from energy_series import PotentialSpec, build_series, level_table
from energy_series.oracles import exact_levels

for spec in (PotentialSpec.power(2), PotentialSpec.power(1)):
    series = build_series(spec, 8)
    table = level_table(series, 4)
    exact = exact_levels(spec, 4)
    print(f"\n{spec.label}: rows are levels, columns P_1^1 .. P_4^4")
    for i, row in enumerate(table.as_rows()):
        cells = "  ".join("    -   " if np.isnan(v) else f"{v:8.5f}" for v in row)
        parity = table.approximants[4].levels()[i][1]
        print(f"E({i}) {parity:>4}  {cells}   exact {exact[i]:.5f}")
