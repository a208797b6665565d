# %% [markdown]
# # A- and Z-sequences
#
# Each row of the array is a fixed linear combination of the row above it.
# The weights come from the compositional inverse of t p(t).

# %%
from riordan_circulant import az_sequences, csum_expansion, parse_poly, theorem6_check, verify_rogers

az = az_sequences(parse_poly("1,1"), 8)
print(az.A.coeffs)
print(az.Z.coeffs)
print(verify_rogers(parse_poly("-1/3,2/3,2/3"), 10).checks)

# %% [markdown]
# With a symbolic c in p = 1 + t + ct^2 the coefficients live in Q[c]/(c^4).

# %%
A = csum_expansion(8)
for n in range(8):
    print(n, A[n])

# %% [markdown]
# The c-linear coefficients are signed central binomials.

# %%
print(theorem6_check(1, 1, 8).details["values"])
