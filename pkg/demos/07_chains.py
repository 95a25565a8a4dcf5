# %% [markdown]
# # Chains to (1, 1, 2)
#
# Moves: a shift (c, d, n) -> (c, d, n + k d), and a jump to another triple of
# the same class.  The search prefers small traces; the verifier re-checks
# every jump by ideal arithmetic alone.

# %%
import json

from csideals.gompf import conjecture_check, corrupt_move, dump_certificate, find_chain, verify_chain

ch = find_chain((32, 103, 52))
print(ch.describe())
print("depth", ch.depth, "verified", bool(verify_chain(ch)))

# %% [markdown]
# Certificates are JSON with integers stored as strings.

# %%
cert = json.loads(dump_certificate(ch))
print(json.dumps(cert["moves"][:2], indent=1))
bad = corrupt_move(ch, 1)
print("corrupted jump:", verify_chain(bad))

# %%
for n in (10, 27, 36):
    rep = conjecture_check(n)
    print(n, "ok" if rep.ok else rep.failures, max(c.depth for c in rep.chains.values()))
