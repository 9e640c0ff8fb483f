"""
Forging Bell-like polynomials from commuting seeds
==================================================

A sum of commuting Pauli products obeys ordinary sign arithmetic.
Splitting each B-side Pauli into (p + q)/sqrt2 and (p - q)/sqrt2 gives the
same operator written with observables that no longer commute.  The LHV
bound of the rewritten polynomial and the seed's spectrum are then
compared.
"""

# %%
import math

from bellforge import CommutingSeed, PairingScheme, forge, seed_candidate_values

r2 = math.sqrt(2)


def show(seed, scheme):
    rep = forge(seed, scheme)
    print("seed      :", " + ".join(f"{c:.4g} {a}{b}" for c, a, b in seed.terms))
    print("polynomial:", rep.polynomial)
    for line in rep.describe_settings():
        print("   ", line)
    print("candidates:", [round(v, 4) for v in seed_candidate_values(seed)])
    print(f"hlv {tuple(round(x, 4) for x in rep.hlv_bounds)}  "
          f"quantum {tuple(round(x, 4) for x in rep.quantum_bounds)}  -> {rep.test_type}\n")
    return rep


# %%
# CHSH comes out of sqrt2 (ZZ + XX) with the single pair (Z, X).
show(CommutingSeed(((r2, "Z", "Z"), (r2, "X", "X"))), PairingScheme((("Z", "X"),)))

# %%
# The twelve-term T comes out of 2 sqrt2 (XX + YY + ZZ) with the cyclic
# pairs; every Pauli is averaged over the two pairs that contain it.
show(CommutingSeed(tuple((2 * r2, a, a) for a in "XYZ")), PairingScheme((("Y", "Z"), ("Z", "X"), ("X", "Y"))))

# %%
# A lone ZZ term: its local bound grows to sqrt2 while the quantum
# spectrum stays at +/-1, so the quantum range sits inside the local one.
show(CommutingSeed(((1.0, "Z", "Z"),)), PairingScheme((("Z", "X"),)))

# %%
# XX - YY with the pair (X, Y).
show(CommutingSeed(((r2, "X", "X"), (-r2, "Y", "Y"))), PairingScheme((("X", "Y"),)))
