"""
Template coefficients from geometry
===================================

Each coefficient is the fraction of a rose cell (an annular sector) lying
inside a strip of half-width 25 km/h.  The exact value comes from a
piecewise closed-form integral; a seeded Monte Carlo run checks it.
"""

import numpy as np

from runwayrose import Strip, coefficient_table, mc_overlap_oracle, paper_table
from runwayrose.geometry import class_cell

exact = coefficient_table()
published = paper_table()
np.set_printoptions(precision=6, suppress=True)
print("exact\n", exact.rows)
print("published\n", published.rows)
print("published - exact\n", published.rows - exact.rows)

# %%
# Monte Carlo cross-check of the outer band (1e6 samples per cell here;
# the acceptance suite uses 1e7).

strip = Strip(0.0, 25.0)
for k in range(8):
    cell = class_cell(exact.geometry, exact.classes, 2, k)
    est = mc_overlap_oracle(cell, strip, samples=1_000_000, seed=1)
    print(f"offset {k}: exact {exact.rows[2, k]:.6f}  mc {est:.6f}")

# %%
# Other crosswind limits: a 20 km/h strip on the same rose geometry.

print(coefficient_table(strip_half_width=20.0).rows)
