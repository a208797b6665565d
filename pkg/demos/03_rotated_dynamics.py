# %% [markdown]
# # Orbits in rotated coordinates
#
# For d = 1 and d = 2 an orthogonal change of basis splits V into an axis and
# a plane.  The orbit then lies on a power curve (d = 1) or on one or two
# helix-like spirals (d = 2).

# %%
import numpy as np

from riordan_circulant import classify_linear, classify_quadratic, helix_points
from riordan_circulant.dynamics import rotated_orbit_linear, rotated_orbit_quadratic
from fractions import Fraction as Fr

a, b = Fr(-4, 11), Fr(6, 11)
res = classify_linear(a, b)
print(res.kind.value, res.diagnostics["curve_exponent"], res.diagnostics["curve_constant"])
for n in range(4):
    print(n, rotated_orbit_linear(a, b, n))

# %% [markdown]
# Three quadratic examples and their parameters.

# %%
for abc in [("93/100", "1/2", "-19/50"), ("-1/2", "2/5", "89/100"), ("9289/10000", "487/1000", "-2159/10000")]:
    d = classify_quadratic(*map(Fr, abc)).diagnostics
    print(abc, d["zscale"], round(d["r"], 5), round(d["cos_theta"], 4), d["spirals"])

# %% [markdown]
# When cos(theta) < 0 consecutive points alternate between two spirals.

# %%
a, b, c = Fr(93, 100), Fr(1, 2), Fr(-19, 50)
branches = helix_points(a, b, c, np.arange(4.0))
for n in range(4):
    print(n, rotated_orbit_quadratic(a, b, c, n), branches[n % 2][n])

# %% [markdown]
# The same points as CSV, ready for any plotting tool:
#
#     riordan-circ --format csv orbit --poly "-4/11,6/11" --rotated --curve --nmax 10
