"""
From raw observations to one or two runways
===========================================

Synthetic hourly winds with a dominant westerly and a weaker southerly
regime are binned into a rose, scored with exact coefficients, and a
second runway is searched when the best one misses 95 %.  The rose and the
best strip are written to ``rose.svg``.
"""

import numpy as np

from runwayrose import (RawObservation, RenderOptions, Strip, best_pair, bin_observations,
                        coefficient_table, orient, render_rose_svg)

rng = np.random.default_rng(42)
n = 8760
westerly = rng.random(n) < 0.6
direction = np.where(westerly, rng.normal(270, 15, n), rng.normal(180, 20, n)) % 360
speed = rng.gamma(2.0, 9.0, n)
obs = [RawObservation(d, v) for d, v in zip(direction, speed)]

rose = bin_observations(obs)
print(f"calm {rose.calm:.2f} %, above outer ring {rose.above_max:.2f} %")
print(np.round(rose.cells, 2))

# %%
# Single runway.

report = orient(rose, coefficient_table())
print(f"best {rose.classes.name(report.best_class)} ({report.designator}): "
      f"{report.best_coverage:.2f} %, meets 95 %: {report.meets_threshold}")

# %%
# Second runway: right angles first, then every other direction.

for mode in ("perpendicular", "exhaustive"):
    (a, b), value = best_pair(rose, report.best_class, mode)
    print(f"{mode:>13}: {rose.classes.name(a)} + {rose.classes.name(b)} -> {value:.2f} %")

# %%
# Picture.

svg = render_rose_svg(rose, RenderOptions(strip=Strip(report.best_azimuth_deg),
                                          show_values=True, decimals=1))
with open("rose.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("wrote rose.svg")
