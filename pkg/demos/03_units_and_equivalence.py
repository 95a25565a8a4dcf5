# %% [markdown]
# # Units and ideal equivalence
#
# Two ideals I, J are equivalent when a I = b J for nonzero a, b.  The test
# looks for y in a scaled colon lattice with a prescribed norm, one point per
# orbit of the unit group, so the unit group comes first.

# %%
from csideals.classes import is_equivalent, is_principal
from csideals.ideals import principal, two_generated
from csideals.order import TracedOrder, mul_coords
from csideals.units import embeddings, saturate, unit_group

for n in (3, 10, 27):
    u = unit_group(n)
    print(f"n={n}: rank {u.rank}, basis {u.basis}, regulator {u.regulator():.6f}, saturated {u.saturated}")

# %% [markdown]
# Saturation enlarges a subgroup until no unit is missing.  Starting from
# theta^2 and theta - 1 recovers theta.

# %%
sq = mul_coords(27, (0, 1, 0), (0, 1, 0))
u = saturate(27, [sq, (-1, 1, 0)])
print("regulator from the subgroup:", round(u.regulator(), 6))
print("real places:", len(embeddings(27).real_roots))

# %% [markdown]
# ## Deciding equivalence
#
# A Yes answer carries (alpha, beta) with alpha I = beta J.  No answers are
# proofs: every candidate up to units was enumerated.

# %%
R = TracedOrder(27)
i, j = two_generated(R, 7, 17), two_generated(R, 44, 49)
dec = is_equivalent(i, j)
print(dec.verdict, dec.alpha, dec.beta)
print(is_equivalent(two_generated(R, 4, 5), i).verdict)

p = is_principal(two_generated(R, 2, 49))
print("<theta-2,49> principal:", p.verdict, "generator", p.alpha,
      principal(R, p.alpha).rows == two_generated(R, 2, 49).rows)
