# %% [markdown]
# # The class monoid at trace 27
#
# Seven classes: one non-invertible class that absorbs every product, and a
# cyclic group of order six.

# %%
from csideals.classes import monoid_table
from csideals.known import TRACE27_LABELS
from csideals.matrices import CSTriple

reps = [CSTriple(*TRACE27_LABELS[i], 27) for i in range(7)]
table = monoid_table(27, reps)
print("      " + "  ".join(f"I_{j}" for j in range(7)))
for i, row in enumerate(table.products):
    print(f"I_{i}   " + "  ".join(f"I_{k}" for k in row))
print("absorbing:", table.absorbing(), " identity:", table.identity())
