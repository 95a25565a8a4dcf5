# %% [markdown]
# # Traces n and 5 - n
#
# The star dual sends (c, d, n) to (p_n(c) mod d, d, 5 - n) and induces a
# bijection of similarity classes.

# %%
from csideals.classes import scan_classes
from csideals.matrices import star_dual, triple_to_matrix

here, there = scan_classes(-5, 400), scan_classes(10, 400)
for rep in here.reps:
    dual = star_dual(rep)
    print(rep, "->", dual, " class rep", there.reps[there.class_of(dual)])
    print("   ", triple_to_matrix(dual))

# %%
for n in range(3, 21):
    a, b = scan_classes(n, 400), scan_classes(5 - n, 400)
    images = sorted(b.class_of(star_dual(r)) for r in a.reps)
    assert images == list(range(len(b.reps)))
print("bijective for n = 3..20")
