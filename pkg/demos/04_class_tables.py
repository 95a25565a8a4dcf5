# %% [markdown]
# # Minimal class representatives
#
# For each trace n the scan walks (c, d) with d <= d_max in order of d then c
# and keeps the first triple of every new class.

# %%
import time

from csideals.classes import enumerate_class_reps, list_equivalent_triples

t0 = time.perf_counter()
for n in (10, 19, 21, 27, 34):
    reps = enumerate_class_reps(n, 400)
    print(f"n={n:3d}  {len(reps):2d} classes  ", " ".join(str(r) for r in reps))
print(f"{time.perf_counter() - t0:.1f}s")

# %% [markdown]
# All triples with d <= 60 in one class:

# %%
print([str(t) for t in list_equivalent_triples(7, 17, 27, 60)])
