# %% [markdown]
# # Ideals as lattices
#
# An ideal is stored by the lower-triangular Hermite normal form of its
# Z-basis, so equality is comparison of rows and the norm is the product of
# the diagonal.

# %%
from csideals.classes import is_invertible, kummer_invertible, prime_power_invertible
from csideals.ideals import colon, fractional_mul, ideal_from_generators, is_unit_fractional, two_generated
from csideals.order import TracedOrder, mul_coords

R = TracedOrder(10)
a = two_generated(R, 2, 3)
print("<theta - 2, 3> rows:", a.rows, "norm", a.norm)
gens = [mul_coords(10, (-8, 1, 0), (-2, 1, 0)), (3, 0, 0), (-2, 1, 0)]
print("same ideal from three generators:", ideal_from_generators(R, gens).rows == a.rows)

# %% [markdown]
# Coprime moduli multiply: <theta - c, p> <theta - c, q> = <theta - c, pq>.

# %%
b = two_generated(R, 2, 5)
print((a * b).rows == two_generated(R, 2, 15).rows)

# %% [markdown]
# ## Invertibility
#
# I is invertible exactly when I (R : I) = R.  The colon ideal is a lattice
# with a denominator.

# %%
R27 = TracedOrder(27)
seven = two_generated(R27, 2, 7)
inv = colon(two_generated(R27, 1, 1), seven)
print("(R : <theta-2,7>) denominator", inv.denominator)
print("product is R:", is_unit_fractional(fractional_mul(inv, seven)))
print("is_invertible:", is_invertible(seven), " by the local criterion:", kummer_invertible(27, 2, 7))
print("<theta-4,5> invertible:", is_invertible(two_generated(R27, 4, 5)))

# %% [markdown]
# Higher powers of 7 at trace 27 collapse into the class of <theta - 2, 7>.

# %%
print(prime_power_invertible(27, 16, 7, 2))
