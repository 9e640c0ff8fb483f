"""Quantum predictions for two-qubit Bell operators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .base import Interval
from .errors import DimensionMismatch, NotHermitian, ZeroVector
from .lhv import CorrelationTable
from .linalg import cmatrix, hermitian_eigenvalues, is_hermitian
from .pauli import ObservableFamily
from .polynomial import BellPolynomial, assemble

DEFAULT_GRID = 721
IMAG_ATOL = 1e-10


def state_vector(amplitudes) -> np.ndarray:
    """Normalised complex amplitude vector."""
    v = np.asarray(amplitudes, dtype=np.complex128).ravel()
    norm = np.linalg.norm(v)
    if norm == 0.0 or not np.isfinite(norm):
        raise ZeroVector("state vector has zero or non-finite norm")
    return v / norm


def named_states() -> dict[str, np.ndarray]:
    """Singlet, chi = (|00> + |11>)/sqrt2, and the triplet basis ``triplet_0..2``.

    The singlet is the column (0, 1, -1, 0)/sqrt2, the nondegenerate
    eigenvector of XX + YY + ZZ.
    """
    r = 1.0 / math.sqrt(2.0)
    return {
        "singlet": np.array([0, r, -r, 0], dtype=np.complex128),
        "chi": np.array([r, 0, 0, r], dtype=np.complex128),
        "triplet_0": np.array([1, 0, 0, 0], dtype=np.complex128),
        "triplet_1": np.array([0, r, r, 0], dtype=np.complex128),
        "triplet_2": np.array([0, 0, 0, 1], dtype=np.complex128),
    }


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite (to -1e-10) operator."""

    m: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = cmatrix(self.m)
        if not is_hermitian(m):
            raise NotHermitian("density matrix must be Hermitian")
        if abs(np.trace(m) - 1.0) > 1e-12:
            raise ValueError(f"density matrix trace {np.trace(m).real!r} is not 1")
        if hermitian_eigenvalues(m)[0] < -1e-10:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "m", m)

    @classmethod
    def pure(cls, psi) -> "DensityMatrix":
        v = state_vector(psi)
        return cls(np.outer(v, v.conj()))

    @classmethod
    def mixture(cls, states, weights=None) -> "DensityMatrix":
        states = [state_vector(s) for s in states]
        if weights is None:
            weights = [1.0 / len(states)] * len(states)
        return cls(sum(w * np.outer(s, s.conj()) for w, s in zip(weights, states)))


def mixed_singlet_components() -> DensityMatrix:
    """Equal mixture of |up,down> and |down,up>: the singlet without its coherence."""
    return DensityMatrix(np.diag([0.0, 0.5, 0.5, 0.0]))


def _hermitian_operand(m, dim: int) -> np.ndarray:
    m = cmatrix(m)
    if m.shape != (dim, dim):
        raise DimensionMismatch(f"operator shape {m.shape} does not act on dimension {dim}")
    if not is_hermitian(m):
        raise NotHermitian("observable must be Hermitian")
    return m


def _real(z: complex) -> float:
    if abs(z.imag) > IMAG_ATOL:
        raise ArithmeticError(f"expectation has imaginary part {z.imag!r}")
    return float(z.real)


def expectation(s, m) -> float:
    """``<s|m|s>`` for a normalised state and a Hermitian operator."""
    s = state_vector(s)
    m = _hermitian_operand(m, s.size)
    return _real(np.vdot(s, m @ s))


def mixed_expectation(rho: DensityMatrix, m) -> float:
    """``Tr(m rho)``."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    m = cmatrix(m)
    if m.shape != rho.m.shape:
        raise DimensionMismatch(f"operator {m.shape} vs density matrix {rho.m.shape}")
    return _real(complex(np.trace(m @ rho.m)))


def interference_split(psi1, psi2, m) -> tuple[float, float]:
    """Split ``<psi|m|psi>`` for ``psi = (psi1 + psi2)/N`` into diagonal and cross parts.

    ``diagonal = (<1|m|1> + <2|m|2>) / N^2`` and
    ``cross = (<1|m|2> + <2|m|1>) / N^2`` with ``N^2 = ||psi1 + psi2||^2``,
    so the two parts add up to the full expectation.  The cross part is
    the interference between the two branches.
    """
    psi1 = np.asarray(psi1, dtype=np.complex128).ravel()
    psi2 = np.asarray(psi2, dtype=np.complex128).ravel()
    if psi1.shape != psi2.shape:
        raise DimensionMismatch(f"branch shapes {psi1.shape} and {psi2.shape} differ")
    n2 = float(np.vdot(psi1 + psi2, psi1 + psi2).real)
    if n2 == 0.0:
        raise ZeroVector("psi1 + psi2 vanishes")
    m = _hermitian_operand(m, psi1.size)
    diag = np.vdot(psi1, m @ psi1) + np.vdot(psi2, m @ psi2)
    cross = np.vdot(psi1, m @ psi2) + np.vdot(psi2, m @ psi1)
    return _real(diag / n2), _real(cross / n2)


def quantum_band(p: BellPolynomial, fam: ObservableFamily, theta: float) -> Interval:
    """``[lambda_min, lambda_max]`` of the assembled operator.

    Every quantum expectation is a convex combination of eigenvalues, and
    each eigenvector attains its eigenvalue, so this interval is exactly
    the set of quantum predictions at ``theta``.
    """
    w = hermitian_eigenvalues(assemble(p, fam, theta))
    return Interval(float(w[0]), float(w[-1]))


def theta_grid(steps: int = DEFAULT_GRID) -> np.ndarray:
    """``steps`` uniform angles on [0, 2pi], both ends included."""
    if steps < 2:
        raise ValueError("a theta grid needs at least two points")
    return np.linspace(0.0, 2.0 * math.pi, steps)


def global_quantum_range(p: BellPolynomial, fam: ObservableFamily, grid: int = DEFAULT_GRID) -> Interval:
    bands = [quantum_band(p, fam, t) for t in theta_grid(grid)]
    return Interval(min(b.lo for b in bands), max(b.hi for b in bands))


@dataclass(frozen=True)
class BandSample:
    theta: float
    q: Interval
    expectations: dict[str, float]


def band_scan(p: BellPolynomial, fam: ObservableFamily, steps: int = DEFAULT_GRID,
              states: dict[str, np.ndarray] | None = None) -> list[BandSample]:
    """Quantum band and named-state expectations on a uniform grid over [0, 2pi]."""
    if states is None:
        ns = named_states()
        states = {"singlet": ns["singlet"], "chi": ns["chi"]}
    out = []
    for t in theta_grid(steps):
        op = assemble(p, fam, t)
        w = hermitian_eigenvalues(op)
        out.append(
            BandSample(
                float(t),
                Interval(float(w[0]), float(w[-1])),
                {name: expectation(s, op) for name, s in states.items()},
            )
        )
    return out


def correlation_table(state, fam: ObservableFamily, theta: float) -> CorrelationTable:
    """All pair correlations ``<A_i B_j>`` of a pure state."""
    s = state_vector(state)
    values = {}
    for i in range(1, fam.m_a + 1):
        a = fam.a(i, theta)
        for j in range(1, fam.n_b + 1):
            values[(i, j)] = expectation(s, a @ fam.b(j, theta))
    return CorrelationTable(fam.scenario, values)


# Closed-form references for the two operators of the package.

def analytic_spectrum_S(theta: float) -> tuple[float, float, float, float]:
    """``(2 cos 2t, -2 cos 2t, 2 sqrt(1 + sin^2 2t), -2 sqrt(1 + sin^2 2t))``."""
    c2 = math.cos(2 * theta)
    r = 2.0 * math.sqrt(1.0 + math.sin(2 * theta) ** 2)
    return (2 * c2, -2 * c2, r, -r)


def analytic_spectrum_T(theta: float) -> tuple[float, float, float, float]:
    k = 2.0 * (math.cos(theta) + math.sin(theta))
    c2, s2 = math.cos(2 * theta), math.sin(2 * theta)
    r_minus = math.sqrt(c2 * c2 + 2.0 + 2.0 * s2)
    r_plus = math.sqrt(c2 * c2 + 2.0 - 2.0 * s2)
    return (k * (-s2 + r_minus), k * (-s2 - r_minus), k * (s2 + r_plus), k * (s2 - r_plus))


def singlet_curve_S(theta: float) -> float:
    """Singlet expectation of the CHSH operator: ``-2 cos t - 2 sin 2t sin t``."""
    return -2.0 * math.cos(theta) - 2.0 * math.sin(2 * theta) * math.sin(theta)


def singlet_curve_T(theta: float) -> float:
    """``f(t) = -2 (cos t + sin t)(1 + 2 sin 2t)``."""
    return -2.0 * (math.cos(theta) + math.sin(theta)) * (1.0 + 2.0 * math.sin(2 * theta))


def chi_curve_T(theta: float) -> float:
    """``g(t) = 2 (cos t + sin t)``."""
    return 2.0 * (math.cos(theta) + math.sin(theta))


def mixed_curve_S(theta: float) -> float:
    return -2.0 * math.cos(theta)
