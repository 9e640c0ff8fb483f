"""
The twelve-term operator T
==========================

T uses three settings on one side and six on the other.  Local models
give values in {-6, -2, 2, 6}; quantum mechanics gives the band
[-6 sqrt2, 2 sqrt2] at theta = pi/4, so each theory has a region the
other forbids.
"""

# %%
import math

import numpy as np

from bellforge import (
    assemble,
    classify,
    enumerate_lhv,
    expectation,
    family_T,
    global_quantum_range,
    hermitian_eigh,
    named_states,
    quantum_band,
    t_polynomial,
)

poly, fam = t_polynomial(), family_T()
print("T =", poly)
lhv = enumerate_lhv(poly)
print("LHV values:", lhv.value_set)

# %%
# At pi/4 the operator is 2 sqrt2 (XX + YY + ZZ); the singlet is the
# lone eigenvector at -6 sqrt2 and the triplet shares 2 sqrt2.
w, v = hermitian_eigh(assemble(poly, fam, math.pi / 4))
print("spectrum at pi/4:", np.round(w, 10))
print("overlap of lowest eigenvector with singlet:", abs(np.vdot(v[:, 0], named_states()["singlet"])) ** 2)

# %%
# Classify the test angle by angle.
for deg in (0, 15, 30, 45, 60, 90, 135):
    t = math.radians(deg)
    q = quantum_band(poly, fam, t)
    print(f"{deg:4d} deg  Q = [{q.lo:8.4f}, {q.hi:8.4f}]  {classify(lhv.bounds, q)}")

print("union over angles:", global_quantum_range(poly, fam))

# %%
theta = np.linspace(0, 2 * math.pi, 721)
bands = np.array([quantum_band(poly, fam, t) for t in theta])
ns = named_states()
f = [expectation(ns["singlet"], assemble(poly, fam, t)) for t in theta]
g = [expectation(ns["chi"], assemble(poly, fam, t)) for t in theta]
print(f"singlet curve spans [{min(f):.4f}, {max(f):.4f}]; chi curve spans [{min(g):.4f}, {max(g):.4f}]")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.fill_between(theta, bands[:, 0], bands[:, 1], color="gold", alpha=0.6, label="quantum band")
    ax.axhspan(-6, 6, color="tab:blue", alpha=0.15, label="LHV range")
    ax.plot(theta, f, color="red", label="singlet")
    ax.plot(theta, g, color="green", label="chi")
    ax.set_xlabel("theta")
    ax.set_ylabel("<T>")
    ax.legend(loc="lower right")
    fig.savefig("t_band.png", dpi=120, bbox_inches="tight")
    print("wrote t_band.png")
