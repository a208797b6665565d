# %% [markdown]
# # Circulant orbits
#
# The periodic blocks of consecutive columns are the orbit of (a_0, ..., a_d)
# under the circulant V whose first row is (a_d, ..., a_0).

# %%
import numpy as np

from riordan_circulant import (
    circulant_of,
    closed_form_orbit,
    eigenvalues,
    fourier_matrix,
    orbit,
    parse_poly,
    verify_theorem2,
)

p = parse_poly("1,5")
V = circulant_of(p)
print(V.rows())
print([orbit(p, n) for n in range(3)])
print(verify_theorem2(p, 6).passed)

# %% [markdown]
# The Fourier matrix diagonalizes V, and the orbit has a closed form in the
# eigenvalues.

# %%
F = fourier_matrix(2)
D = F.conj().T @ V.to_numpy() @ F
print(np.round(D, 12))
print(eigenvalues(p).values)
print(closed_form_orbit(p, 2).real)

# %% [markdown]
# Larger degree works the same way.

# %%
q = parse_poly("2,-1,1/2,3")
print(np.max(np.abs(closed_form_orbit(q, 10) - np.array([float(x) for x in orbit(q, 10)]))))
