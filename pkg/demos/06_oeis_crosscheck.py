# %% [markdown]
# # Cross-checking against OEIS
#
# b-files come from the local cache, the network, or the copies bundled with
# the package.  Set OEIS_OFFLINE=1 to stay off the network.

# %%
import os

os.environ.setdefault("OEIS_OFFLINE", "1")

from riordan_circulant import OEISClient, check_sequence, csum_expansion, theorem6_check
from riordan_circulant.azseq import catalan_table

client = OEISClient()
t6 = [int(v) for v in theorem6_check(1, 1, 10).details["values"]]
for sid in ("A001700", "A088218"):
    print(check_sequence(t6, sid, client=client).to_dict())

# %%
A = csum_expansion(12, K=3)
print(check_sequence([int(A[n][2]) for n in range(4, 12)], "A002740", client=client).to_dict())
print(check_sequence(catalan_table(15), "A000108", client=client).ok)
