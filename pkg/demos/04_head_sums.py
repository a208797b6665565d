# %% [markdown]
# # Head sums and finite orders
#
# When V has finite order m, the orbit repeats every m columns.  For
# p = (-1 + 2t + 2t^2)/3 the sums of the entries above each periodic tail
# repeat too.

# %%
from riordan_circulant import abbreviated_array, head_sums, matrix_order, parse_poly, verify_prop5

p = parse_poly("-1/3,2/3,2/3")
print(matrix_order(p))
print([str(x) for x in head_sums(p, range(1, 13))])
print(verify_prop5(3).passed)

# %% [markdown]
# Dropping every column's head leaves a doubly periodic matrix.

# %%
ab = abbreviated_array(p, 8, block_reps=2)
for row in ab.matrix():
    print(" ".join(f"{str(x):>5}" for x in row))
print(ab.horizontal_period, ab.vertical_period)

# %% [markdown]
# Another order-6 polynomial whose head sums grow instead.

# %%
print([str(x) for x in head_sums(parse_poly("2/3,-1/3,2/3"), range(1, 11))])
