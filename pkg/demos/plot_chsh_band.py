"""
The CHSH operator across detector angles
========================================

Builds S_theta from the two-setting detector family, compares its
numerical spectrum with the closed form, and plots the quantum band
against the local range [-2, 2] together with the singlet curve.
"""

# %%
import math

import numpy as np

from bellforge import (
    assemble,
    chsh_polynomial,
    enumerate_lhv,
    expectation,
    family_S,
    hermitian_eigenvalues,
    interference_split,
    named_states,
    quantum_band,
)
from bellforge.quantum import analytic_spectrum_S, mixed_expectation, mixed_singlet_components

poly, fam = chsh_polynomial(), family_S()
print("S =", poly)

# %%
# Local hidden variables: every deterministic strategy gives +2 or -2.
print("LHV values:", enumerate_lhv(poly).value_set)

# %%
# At theta = pi/4 the spectrum is {-2 sqrt2, 0, 0, 2 sqrt2}.
S = assemble(poly, fam, math.pi / 4)
print("spectrum at pi/4:", np.round(hermitian_eigenvalues(S), 12) + 0.0)
print("closed form     :", np.round(sorted(analytic_spectrum_S(math.pi / 4)), 12) + 0.0)

# %%
# The singlet reaches the bottom of the band at pi/4.  Splitting it into
# |up,down> and |down,up> shows half of the value coming from the cross
# (interference) terms.  Dropping them, as the incoherent mixture does,
# leaves -2 cos(theta), which never leaves [-2, 2].
psi = named_states()["singlet"]
r = 1 / math.sqrt(2)
diag, cross = interference_split([0, r, 0, 0], [0, 0, -r, 0], S)
print(f"<S> singlet = {expectation(psi, S):.6f} = {diag:.6f} (diagonal) + {cross:.6f} (cross)")
print(f"<S> mixture = {mixed_expectation(mixed_singlet_components(), S):.6f}")

# %%
theta = np.linspace(0, 2 * math.pi, 721)
bands = np.array([quantum_band(poly, fam, t) for t in theta])
singlet = [expectation(psi, assemble(poly, fam, t)) for t in theta]

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.fill_between(theta, bands[:, 0], bands[:, 1], color="gold", alpha=0.6, label="quantum band")
    ax.axhspan(-2, 2, color="tab:blue", alpha=0.15, label="LHV range")
    ax.plot(theta, singlet, color="red", label="singlet")
    ax.set_xlabel("theta")
    ax.set_ylabel("<S>")
    ax.legend(loc="lower right")
    fig.savefig("chsh_band.png", dpi=120, bbox_inches="tight")
    print("wrote chsh_band.png")
