"""
Classic Type-II tally with the published template coefficients
==============================================================

Eight runway lines, three speed bands above calm (6.4-15, 15-30 and
30-47 km/h) and the 50 km/h wide template.  The inner band is always fully
inside the template, so only the two outer bands carry coefficients.
"""

import numpy as np

from runwayrose import WindRose, orient, paper_table

table = paper_table()
print("template coefficients (rows = bands, columns = offset from runway)")
print(table.to_csv())

# percent of the year the wind blows in each (band, direction) cell
cells = np.array([
    [5.2, 4.1, 3.0, 2.2, 4.8, 3.9, 2.5, 3.3],
    [7.0, 5.4, 3.1, 1.8, 6.2, 4.0, 1.1, 2.9],
    [2.5, 1.7, 0.6, 0.3, 1.9, 0.8, 0.2, 0.9],
])
rose = WindRose(cells)
print(f"calm period: {rose.calm:.2f} %")

# %%
# Coverage of every runway line, best orientation and the 95 % check.

report = orient(rose, table)
for k, cov in enumerate(report.coverage):
    print(f"{rose.classes.name(k):<9} {cov:8.4f} %")
print(f"best: {rose.classes.name(report.best_class)}, runway {report.designator}, "
      f"{report.best_coverage:.4f} %, meets 95 %: {report.meets_threshold}")

# %%
# The same rose with the legacy class-index runway numbers.

legacy = orient(rose, table, numbering="paper")
print("legacy runway number:", legacy.designator)
