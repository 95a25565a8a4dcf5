# %% [markdown]
# # The family (c, d, c + 2)
#
# Triples with d | c^2 - c + 1.  The entry a of the matrix is
# (c^2 - c + 1)/d; the cases a = 19 and a = 37 are listed separately.

# %%
from csideals.gompf import earle_check, earle_residual

print("a = 19:", [str(t) for t in earle_residual(19)])
print("a = 37:", [str(t) for t in earle_residual(37)])

# %%
rep = earle_check(94, 134, progress=None)
depths = [c.depth for c in rep.chains.values()]
print(len(rep.chains), "triples chained, failures:", rep.failures, "max depth:", max(depths))
