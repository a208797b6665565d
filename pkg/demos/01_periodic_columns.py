# %% [markdown]
# # Periodic columns
#
# The array (1/(1 - t^(d+1)), t p(t)) turns periodic down every column.
# Column k repeats with period d+1 from row 1 + (k-1)(d+1) on.

# %%
from riordan_circulant import build, parse_poly, periodic_block, verify_theorem1

p = parse_poly("1,5")
arr = build(p, 9, 5)
for row in arr.entries:
    print(" ".join(f"{str(x):>4}" for x in row))

# %% [markdown]
# Column 3 starts 0, 0, 0, 1, 15 and then alternates 76, 140.

# %%
print(arr.column(3))
print(periodic_block(arr, 3))
print(verify_theorem1(p, 3).to_dict())

# %% [markdown]
# Rational coefficients stay exact.

# %%
rap = build(parse_poly("-1/3,2/3,2/3"), 10, 6)
print(rap[6, 3], rap[9, 5])
