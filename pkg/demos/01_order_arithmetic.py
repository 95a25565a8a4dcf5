# %% [markdown]
# # Arithmetic in Z[theta_n]
#
# theta_n is a root of f_n(x) = x^3 - n x^2 + (n-1) x - 1.  Elements are
# integer triples (a0, a1, a2) meaning a0 + a1 theta + a2 theta^2.

# %%
from csideals.order import TracedOrder, discriminant, f_eval, nonmaximality_witness, p_eval, phi_map

R = TracedOrder(27)
theta = R.theta
x = R(-4, 1, 0)          # theta - 4
print("theta^3 =", (theta ** 3).coords)
print("N(theta) =", theta.norm(), " N(theta - 1) =", (theta - 1).norm())
print("N(theta - 4) =", x.norm(), " and -f_27(4) =", -f_eval(27, 4))

# %% [markdown]
# Norms are determinants of the multiplication matrix, so they are exact for
# any size of n.

# %%
big = TracedOrder(10**25)
print("N(theta - 7) for n = 10^25:", big(-7, 1, 0).norm())

# %% [markdown]
# ## The map to trace 5 - n
#
# theta_n -> theta^2 + (n - 4) theta + 1 defines a ring isomorphism
# Z[theta_n] -> Z[theta_{5-n}].  Applying it twice returns the element.

# %%
y = R(3, -2, 5)
image = phi_map(27, y)
print("phi(y) =", image.coords, " in Z[theta_-22]")
print("back:", phi_map(-22, image).coords)
print("discriminants:", discriminant(27), discriminant(-22))
print("p_27(2) =", p_eval(27, 2))

# %% [markdown]
# ## A witness that Z[theta_{49k+27}] is not maximal
#
# (theta - 2)^2 / 7 is a root of an integral cubic g_k.

# %%
for k in (-1, 0, 1):
    w = nonmaximality_witness(k)
    print(k, "g_k coefficients", w.g.coeffs, "identity", w.identity_verified, "irreducible", w.irreducible)
